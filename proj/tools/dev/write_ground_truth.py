"""Writes the curated property catalogs and oracle annotations.

Catalog entries are read off the fixture Javadocs in data/docs; annotations
record a manual judgment of the oracles the shipped responses produce.
"""
import json
import pathlib

A, E = "assertion", "exception"

# (id, method, kind, description, exceptionType)
CATALOG = {
"java.lang.Object": [
    ("Object.getClass.runtimeClass", "getClass", A, "returns the runtime class of the object", None),
    ("Object.hashCode.consistent", "hashCode", A, "repeated calls return the same integer while equals-relevant state is unchanged", None),
    ("Object.hashCode.equalObjectsEqualHashes", "hashCode", A, "equal objects produce equal hash codes", None),
    ("Object.hashCode.distinctNotRequired", "hashCode", A, "unequal objects need not produce distinct hash codes", None),
    ("Object.equals.reflexive", "equals", A, "x.equals(x) is true for non-null x", None),
    ("Object.equals.symmetric", "equals", A, "x.equals(y) iff y.equals(x)", None),
    ("Object.equals.transitive", "equals", A, "x.equals(y) and y.equals(z) imply x.equals(z)", None),
    ("Object.equals.consistent", "equals", A, "repeated x.equals(y) calls agree", None),
    ("Object.equals.nullFalse", "equals", A, "x.equals(null) is false", None),
    ("Object.equals.hashCodeContract", "equals", A, "overriding equals keeps equal objects' hash codes equal", None),
    ("Object.clone.distinctObject", "clone", A, "x.clone() != x", None),
    ("Object.clone.sameClass", "clone", A, "x.clone().getClass() == x.getClass()", None),
    ("Object.clone.independent", "clone", A, "the clone is independent of the original", None),
    ("Object.clone.notSupported", "clone", E, "throws when the class does not implement Cloneable", "CloneNotSupportedException"),
    ("Object.toString.defaultFormat", "toString", A, "class name, '@', and hex hash code", None),
    ("Object.notify.wakesOne", "notify", A, "wakes a single waiting thread", None),
    ("Object.notify.monitor", "notify", E, "caller must own the monitor", "IllegalMonitorStateException"),
    ("Object.notifyAll.wakesAll", "notifyAll", A, "wakes all waiting threads", None),
    ("Object.notifyAll.monitor", "notifyAll", E, "caller must own the monitor", "IllegalMonitorStateException"),
    ("Object.waitTimeout.elapses", "wait", A, "returns once the timeout has elapsed", None),
    ("Object.waitTimeout.negative", "wait", E, "negative timeout", "IllegalArgumentException"),
    ("Object.waitTimeout.monitor", "wait", E, "caller must own the monitor", "IllegalMonitorStateException"),
    ("Object.waitTimeout.interrupted", "wait", E, "interrupted while waiting", "InterruptedException"),
    ("Object.waitNanos.range", "wait", E, "nanos outside 0-999999 or negative timeout", "IllegalArgumentException"),
    ("Object.waitNanos.monitor", "wait", E, "caller must own the monitor", "IllegalMonitorStateException"),
    ("Object.waitNanos.interrupted", "wait", E, "interrupted while waiting", "InterruptedException"),
    ("Object.wait.untilNotified", "wait", A, "waits until another thread notifies", None),
    ("Object.wait.monitor", "wait", E, "caller must own the monitor", "IllegalMonitorStateException"),
    ("Object.wait.interrupted", "wait", E, "interrupted while waiting", "InterruptedException"),
],
"java.lang.String": [
    ("String.length.codeUnits", "length", A, "length equals the number of UTF-16 code units", None),
    ("String.isEmpty.lengthZero", "isEmpty", A, "true iff length() is 0", None),
    ("String.charAt.value", "charAt", A, "returns the char at the index", None),
    ("String.charAt.range", "charAt", E, "index negative or not less than length", "IndexOutOfBoundsException"),
    ("String.codePointAt.value", "codePointAt", A, "returns the code point at the index", None),
    ("String.codePointAt.range", "codePointAt", E, "index negative or not less than length", "IndexOutOfBoundsException"),
    ("String.indexOf.smallest", "indexOf", A, "returns the smallest k with startsWith(str, k)", None),
    ("String.indexOf.notFound", "indexOf", A, "returns -1 when absent", None),
    ("String.contains.semantics", "contains", A, "true iff the sequence occurs", None),
    ("String.contains.null", "contains", E, "null argument", "NullPointerException"),
    ("String.equals.sameSequence", "equals", A, "true iff the argument is a String with the same characters", None),
    ("String.equals.nullFalse", "equals", A, "false for a null argument", None),
    ("String.hashCode.formula", "hashCode", A, "s[0]*31^(n-1) + ... + s[n-1]", None),
    ("String.hashCode.empty", "hashCode", A, "the empty string hashes to zero", None),
],
"java.util.List": [
    ("List.size.count", "size", A, "number of elements, capped at Integer.MAX_VALUE", None),
    ("List.isEmpty.noElements", "isEmpty", A, "true iff the list has no elements", None),
    ("List.contains.membership", "contains", A, "true iff some element equals o", None),
    ("List.contains.classCast", "contains", E, "incompatible element type", "ClassCastException"),
    ("List.contains.null", "contains", E, "null element not permitted", "NullPointerException"),
    ("List.add.appends", "add", A, "appends to the end and returns true", None),
    ("List.add.unsupported", "add", E, "add not supported", "UnsupportedOperationException"),
    ("List.add.classCast", "add", E, "element class prevents adding", "ClassCastException"),
    ("List.add.null", "add", E, "null element not permitted", "NullPointerException"),
    ("List.add.illegalArgument", "add", E, "element property prevents adding", "IllegalArgumentException"),
    ("List.remove.firstOccurrence", "remove", A, "removes the first occurrence only", None),
    ("List.remove.returnValue", "remove", A, "returns whether the list contained the element", None),
    ("List.remove.classCast", "remove", E, "incompatible element type", "ClassCastException"),
    ("List.remove.null", "remove", E, "null element not permitted", "NullPointerException"),
    ("List.remove.unsupported", "remove", E, "remove not supported", "UnsupportedOperationException"),
    ("List.get.element", "get", A, "returns the element at the position", None),
    ("List.get.range", "get", E, "index < 0 or index >= size()", "IndexOutOfBoundsException"),
],
"java.util.Map": [
    ("Map.size.count", "size", A, "number of mappings", None),
    ("Map.isEmpty.noMappings", "isEmpty", A, "true iff the map has no mappings", None),
    ("Map.get.mapped", "get", A, "returns the mapped value", None),
    ("Map.get.absentNull", "get", A, "returns null when no mapping exists", None),
    ("Map.get.classCast", "get", E, "inappropriate key type", "ClassCastException"),
    ("Map.get.null", "get", E, "null key not permitted", "NullPointerException"),
    ("Map.put.associates", "put", A, "the key maps to the new value afterwards", None),
    ("Map.put.returnsPrevious", "put", A, "returns the previous value or null", None),
    ("Map.put.unsupported", "put", E, "put not supported", "UnsupportedOperationException"),
    ("Map.put.null", "put", E, "null key or value not permitted", "NullPointerException"),
    ("Map.forEach.allEntries", "forEach", A, "performs the action for every entry", None),
    ("Map.forEach.nullAction", "forEach", E, "null action", "NullPointerException"),
    ("Map.forEach.concurrentModification", "forEach", E, "entry removed during iteration", "ConcurrentModificationException"),
],
"java.util.Set": [
    ("Set.size.cardinality", "size", A, "number of elements", None),
    ("Set.isEmpty.noElements", "isEmpty", A, "true iff the set has no elements", None),
    ("Set.add.noDuplicates", "add", A, "an element already present is not added again", None),
    ("Set.add.returnValue", "add", A, "returns false when the element was present", None),
    ("Set.add.unsupported", "add", E, "add not supported", "UnsupportedOperationException"),
    ("Set.add.null", "add", E, "null element not permitted", "NullPointerException"),
    ("Set.contains.membership", "contains", A, "true iff some element equals o", None),
    ("Set.contains.null", "contains", E, "null element not permitted", "NullPointerException"),
],
}

# (oracle id, matched property ids, correct, note)
ANNOTATIONS = {
"java.lang.Object": [
    ("java.lang.Object#getClass()#1", ["Object.getClass.runtimeClass"], True, ""),
    ("java.lang.Object#getClass()#2", ["Object.getClass.runtimeClass"], True, "implicit reproducibility"),
    ("java.lang.Object#hashCode()#1", ["Object.hashCode.consistent"], True, ""),
    ("java.lang.Object#hashCode()#2", ["Object.hashCode.equalObjectsEqualHashes"], True, ""),
    ("java.lang.Object#equals(Object)#1", ["Object.equals.reflexive"], True, ""),
    ("java.lang.Object#equals(Object)#2", ["Object.equals.symmetric"], True, ""),
    ("java.lang.Object#equals(Object)#3", ["Object.equals.transitive"], True, ""),
    ("java.lang.Object#equals(Object)#4", ["Object.equals.consistent"], True, ""),
    ("java.lang.Object#equals(Object)#5", ["Object.equals.nullFalse"], True, ""),
    ("java.lang.Object#equals(Object)#6", ["Object.equals.hashCodeContract", "Object.hashCode.equalObjectsEqualHashes"], True, ""),
    ("java.lang.Object#clone()#1", ["Object.clone.distinctObject"], False, "reflective call leaves checked exceptions unhandled"),
    ("java.lang.Object#clone()#2", ["Object.clone.independent"], True, "correct but needs the CloneExample helper"),
    ("java.lang.Object#clone()#3", ["Object.clone.notSupported"], True, ""),
    ("java.lang.Object#toString()#1", ["Object.toString.defaultFormat"], True, ""),
    ("java.lang.Object#toString()#2", [], True, "undocumented non-null property"),
    ("java.lang.Object#notify()#1", ["Object.notify.monitor"], True, ""),
    ("java.lang.Object#notify()#2", ["Object.notify.wakesOne"], True, ""),
    ("java.lang.Object#notifyAll()#1", ["Object.notifyAll.monitor"], True, ""),
    ("java.lang.Object#wait(long)#1", ["Object.waitTimeout.negative"], True, ""),
    ("java.lang.Object#wait(long)#2", ["Object.waitTimeout.elapses"], True, ""),
    ("java.lang.Object#wait(long,int)#1", ["Object.waitNanos.range"], True, ""),
    ("java.lang.Object#wait()#1", ["Object.wait.untilNotified"], True, ""),
    ("java.lang.Object#wait()#2", ["Object.wait.monitor"], True, ""),
    ("java.lang.Object#finalize()#1", [], False, "does not exercise finalize on the argument"),
],
"java.lang.String": [
    ("java.lang.String#length()#1", ["String.length.codeUnits"], True, ""),
    ("java.lang.String#isEmpty()#1", ["String.isEmpty.lengthZero"], True, ""),
    ("java.lang.String#charAt(int)#1", ["String.charAt.value", "String.charAt.range"], True, ""),
    ("java.lang.String#codePointAt(int)#1", ["String.codePointAt.range"], True, ""),
    ("java.lang.String#codePointAt(int)#2", ["String.codePointAt.value"], True, ""),
    ("java.lang.String#indexOf(String)#1", ["String.indexOf.smallest", "String.indexOf.notFound"], True, ""),
    ("java.lang.String#contains(CharSequence)#1", ["String.contains.semantics"], False, "comparison used as a statement"),
    ("java.lang.String#contains(CharSequence)#2", ["String.contains.null"], True, ""),
    ("java.lang.String#equals(Object)#1", ["String.equals.sameSequence", "String.equals.nullFalse"], True, ""),
    ("java.lang.String#hashCode()#1", ["String.hashCode.formula"], True, ""),
    ("java.lang.String#hashCode()#2", ["String.hashCode.empty"], True, ""),
],
"java.util.List": [
    ("java.util.List#size()#1", [], True, "undocumented non-negativity"),
    ("java.util.List#isEmpty()#1", ["List.isEmpty.noElements"], True, ""),
    ("java.util.List#contains(Object)#1", ["List.contains.membership"], True, ""),
    ("java.util.List#add(E)#1", ["List.add.appends", "List.add.unsupported"], True, ""),
    ("java.util.List#remove(Object)#1", ["List.remove.firstOccurrence", "List.remove.returnValue"], True, ""),
    ("java.util.List#get(int)#1", ["List.get.range"], True, ""),
],
"java.util.Map": [
    ("java.util.Map#size()#1", [], True, "undocumented non-negativity"),
    ("java.util.Map#isEmpty()#1", ["Map.isEmpty.noMappings"], True, ""),
    ("java.util.Map#get(Object)#1", ["Map.get.absentNull"], True, ""),
    ("java.util.Map#put(K,V)#1", ["Map.put.associates", "Map.put.returnsPrevious", "Map.put.unsupported"], True, ""),
    ("java.util.Map#forEach(BiConsumer)#1", ["Map.forEach.nullAction"], True, ""),
    ("java.util.Map#forEach(BiConsumer)#2", ["Map.forEach.concurrentModification"], True, "covers removal during iteration only"),
],
"java.util.Set": [
    ("java.util.Set#size()#1", ["Set.size.cardinality"], False, "count() returns long"),
    ("java.util.Set#isEmpty()#1", ["Set.isEmpty.noElements"], True, ""),
    ("java.util.Set#add(E)#1", ["Set.add.noDuplicates", "Set.add.returnValue"], True, ""),
    ("java.util.Set#add(E)#2", ["Set.add.unsupported"], False, "accepts any outcome"),
    ("java.util.Set#contains(Object)#1", ["Set.contains.membership"], True, ""),
],
}

for fqcn, entries in CATALOG.items():
    out = []
    for pid, method, kind, desc, exc in entries:
        e = {"id": pid, "targetClass": fqcn, "targetMethod": method, "kind": kind, "description": desc}
        if exc:
            e["exceptionType"] = exc
        out.append(e)
    path = pathlib.Path("data/catalog") / f"{fqcn}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=2) + "\n")

for fqcn, entries in ANNOTATIONS.items():
    out = [{"oracleId": o, "matchedPropertyIds": m, "correct": c, "note": n} for o, m, c, n in entries]
    path = pathlib.Path("data/annotations") / f"{fqcn}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=2) + "\n")
