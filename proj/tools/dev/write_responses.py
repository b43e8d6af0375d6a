"""Writes the hand-authored model responses used to build replay cassettes.

Run from the repository root; output goes to data/responses/<fqcn>.json.
"""
import json
import pathlib

OUT = pathlib.Path("data/responses")

R = {}

R["java.lang.Object"] = {
"java.lang.Object#getClass()": """Properties found in the description of getClass():

1. The returned Class object represents the runtime class of the object.
2. Calling getClass() repeatedly yields the same Class object.

**Runtime class property**
```java
boolean checkRuntimeClass(Object x) {
    return x == null || x.getClass() == x.getClass();
}
```

**Reproducibility**
```java
boolean checkGetClassReproducible(Object x) {
    if (x == null) return true;
    Class<?> first = x.getClass();
    for (int i = 0; i < 10; i++) {
        if (x.getClass() != first) return false;
    }
    return true;
}
```
""",
"java.lang.Object#hashCode()": """Step 1 - Properties: consistency across invocations, agreement with equals, no requirement for distinct values.

Step 2 - Oracles:

For consistency, the test oracle is:
```java
boolean checkHashCodeConsistency(Object x) {
    if (x == null) return true;
    int first = x.hashCode();
    return first == x.hashCode() && first == x.hashCode();
}
```

For equals and hashCode agreement, the test oracle is:
```java
boolean checkEqualsHashCodeConsistency(Object x, Object y) {
    if (x != null && y != null && x.equals(y)) {
        return x.hashCode() == y.hashCode();
    }
    return true;
}
```
""",
"java.lang.Object#equals(Object)": """Here are the test oracles for the properties of equals(Object obj).

For reflexive, the test oracle is:
```java
boolean checkReflexive(Object x) {
    return x != null ? x.equals(x) : true;
}
```

For symmetric, the test oracle is:
```java
boolean checkSymmetric(Object x, Object y) {
    if (x == null || y == null) return x == y;
    return x.equals(y) == y.equals(x);
}
```

For transitive, the test oracle is:
```java
boolean checkTransitive(Object x, Object y, Object z) {
    if (x == null || y == null || z == null) return true;
    if (x.equals(y) && y.equals(z)) {
        return x.equals(z);
    }
    return true;
}
```

For consistent, the test oracle is:
```java
boolean checkConsistent(Object x, Object y) {
    if (x == null || y == null) return true;
    boolean first = x.equals(y);
    for (int i = 0; i < 5; i++) {
        if (x.equals(y) != first) return false;
    }
    return true;
}
```

For the null comparison, the test oracle is:
```java
boolean checkNonNullity(Object x) {
    return x == null || !x.equals(null);
}
```

For hashCode consistency with equals, the test oracle is:
```java
boolean checkEqualsHashCodeConsistency(Object x, Object y) {
    if (x != null && y != null && x.equals(y)) {
        return x.hashCode() == y.hashCode();
    }
    return true;
}
```
""",
"java.lang.Object#clone()": """### Clone is a different object
```java
boolean checkCloneIdentity(Cloneable x) throws CloneNotSupportedException {
    Object copy = x.getClass().getMethod("clone").invoke(x);
    return copy != x;
}
```

### Clone independency
```java
boolean checkCloneIndependency(Object x) throws CloneNotSupportedException {
    Object original = x.clone();
    Object clone = original.clone();
        
    // Assuming clone modifies a mutable field as a simple example
    if (original instanceof CloneExample) { // CloneExample is a hypothetical class with mutable fields
        ((CloneExample) clone).setMutableField(new Object());
    }

    return !clone.equals(original);
}
```

### Unsupported clone
```java
boolean checkCloneNotSupported(Object x) {
    try {
        Object copy = x.clone();
        return x instanceof Cloneable;
    } catch (CloneNotSupportedException e) {
        return !(x instanceof Cloneable);
    }
}
```
""",
"java.lang.Object#toString()": """For the default format, the test oracle is:
```java
boolean checkDefaultToStringFormat(Object x) {
    if (x == null) return true;
    String expected = x.getClass().getName() + "@" + Integer.toHexString(x.hashCode());
    return x.getClass() != Object.class || x.toString().equals(expected);
}
```

For non-null results:
```java
boolean checkToStringNotNull(Object x) {
    return x == null || x.toString() != null;
}
```
""",
"java.lang.Object#notify()": """For the monitor ownership requirement, the test oracle is:
```java
boolean checkNotifyRequiresMonitor(Object obj) {
    try {
        obj.notify();
        return false;
    } catch (IllegalMonitorStateException e) {
        return true;
    }
}
```

For a single waiting thread being awakened:
```java
boolean checkNotifyWakesWaiter(Object obj) throws InterruptedException {
    final boolean[] woke = {false};
    Thread waiter = new Thread(() -> {
        synchronized (obj) {
            try {
                obj.wait();
                woke[0] = true;
            } catch (InterruptedException e) {
                Thread.currentThread().interrupt();
            }
        }
    });
    waiter.start();
    Thread.sleep(100);
    synchronized (obj) {
        obj.notify();
    }
    waiter.join(1000);
    return woke[0];
}
```
""",
"java.lang.Object#notifyAll()": """For the monitor ownership requirement, the test oracle is:
```java
boolean checkNotifyAllRequiresMonitor(Object obj) {
    try {
        obj.notifyAll();
        return false;
    } catch (IllegalMonitorStateException e) {
        return true;
    }
}
```
""",
"java.lang.Object#wait(long)": """1. Negative timeout:
```java
boolean checkNegativeTimeout(Object obj) {
    synchronized (obj) {
        try {
            obj.wait(-1);
            return false;
        } catch (IllegalArgumentException e) {
            return true;
        } catch (InterruptedException e) {
            return false;
        }
    }
}
```

2. Timed wait returns after the timeout:
```java
boolean checkTimedWait(Object obj) {
    synchronized (obj) {
        try {
            long start = System.currentTimeMillis();
            obj.wait(50);
            return System.currentTimeMillis() - start >= 50;
        } catch (InterruptedException e) {
            return false;
        }
    }
}
```
""",
"java.lang.Object#wait(long,int)": """For the nanos range, the test oracle is:
```java
boolean checkNanosRange(Object obj, int nanos) {
    synchronized (obj) {
        try {
            obj.wait(1, nanos);
            return nanos >= 0 && nanos <= 999999;
        } catch (IllegalArgumentException e) {
            return nanos < 0 || nanos > 999999;
        } catch (InterruptedException e) {
            return false;
        }
    }
}
```
""",
"java.lang.Object#wait()": """For the indefinite wait, the test oracle is:
```java
// Oracle to verify that the wait is indefinite without notify
boolean checkIndefiniteWait(Object obj) {
    Thread notifyingThread = new Thread(() -> {
        try {
            Thread.sleep(100); // Delay to ensure main thread is waiting
            synchronized (obj) {
                obj.notify();
            }
        } catch (InterruptedException e) {
            Thread.currentThread().interrupt();
        }
    });
    
    long startTime = System.currentTimeMillis();
    synchronized (obj) {
        try {
            notifyingThread.start();
            obj.wait(); // This should wait until it is notified above
            long waitTime = System.currentTimeMillis() - startTime;
            return waitTime >= 100 && waitTime < 200; // Check that wait was indeed waiting until notified
        } catch (InterruptedException e) {
            return false; // If interrupted, not handling as indefinite wait
        }
    }
}
```

For the monitor ownership requirement, the test oracle is:
```java
boolean checkWaitRequiresMonitor(Object obj) {
    try {
        obj.wait();
        return false;
    } catch (IllegalMonitorStateException e) {
        return true;
    } catch (InterruptedException e) {
        return false;
    }
}
```
""",
"java.lang.Object#finalize()": """The finalize method is deprecated and its invocation is controlled by the garbage collector, so its behavior cannot be checked deterministically. One observable property is that the default implementation does nothing and throws nothing:

```java
boolean checkDefaultFinalizeIsNoOp() {
    Object probe = new Object() {
        boolean run() {
            try {
                finalize();
                return true;
            } catch (Throwable t) {
                return false;
            }
        }
    }.run() ? new Object() : null;
    return probe != null;
}
```
""",
}

R["java.lang.String"] = {
"java.lang.String#length()": """For the length property, the test oracle is:
```java
boolean checkLengthMatchesChars(String str) {
    return str.length() == str.toCharArray().length;
}
```
""",
"java.lang.String#isEmpty()": """For isEmpty agreeing with length, the test oracle is:
```java
boolean checkIsEmptyMatchesLength(String str) {
    return str.isEmpty() == (str.length() == 0);
}
```
""",
"java.lang.String#charAt(int)": """For the valid index range:
```java
boolean checkCharAtIndex(String str, int index) {
    try {
        char c = str.charAt(index);
        return index >= 0 && index < str.length() && c == str.toCharArray()[index];
    } catch (IndexOutOfBoundsException e) {
        return index < 0 || index >= str.length();
    }
}
```
""",
"java.lang.String#codePointAt(int)": """```java
/**
 * Test oracle to check if codePointAt method correctly handles index validation.
 * 
 * @param str   the string to test
 * @param index the index of the code point to retrieve
 * @return true if the method correctly throws IndexOutOfBoundsException when necessary, false otherwise
 */
boolean checkIndexValidation(String str, int index) {
    try {
        int result = str.codePointAt(index);
        return true; // No exception means index is within valid range.
    } catch (IndexOutOfBoundsException e) {
        return index < 0 || index >= str.length();
    } catch (Exception e) {
        return false; // Handle unexpected exceptions.
    }
}
```

```java
/**
 * Test oracle for BMP characters, whose code point equals the char value.
 */
boolean checkBmpCodePoint(String str, int index) {
    if (index < 0 || index >= str.length()) return true;
    char c = str.charAt(index);
    if (Character.isSurrogate(c)) return true;
    return str.codePointAt(index) == c;
}
```
""",
"java.lang.String#indexOf(String)": """For the smallest matching index:
```java
boolean checkIndexOfSmallest(String str, String sub) {
    int k = str.indexOf(sub);
    if (k == -1) return !str.contains(sub);
    for (int i = 0; i < k; i++) {
        if (str.startsWith(sub, i)) return false;
    }
    return str.startsWith(sub, k);
}
```
""",
"java.lang.String#contains(CharSequence)": """For contains agreeing with indexOf, the test oracle is:
```java
boolean checkContainsMatchesIndexOf(String mainStr, CharSequence subSeq) {
    boolean actualResult = mainStr.contains(subSeq);
    actualResult == mainStr.indexOf(subSeq.toString()) != -1;
    return actualResult;
}
```

For the null argument:
```java
boolean checkContainsNull(String mainStr) {
    try {
        mainStr.contains(null);
        return false;
    } catch (NullPointerException e) {
        return true;
    }
}
```
""",
"java.lang.String#equals(Object)": """For equality of character sequences:
```java
boolean checkStringEquals(String a, Object b) {
    boolean expected = b instanceof String && a.contentEquals((String) b);
    return a.equals(b) == expected;
}
```
""",
"java.lang.String#hashCode()": """For the documented hash formula:
```java
boolean checkHashFormula(String s) {
    int h = 0;
    for (int i = 0; i < s.length(); i++) {
        h = 31 * h + s.charAt(i);
    }
    return s.hashCode() == h;
}
```

For the empty string:
```java
boolean checkEmptyHash() {
    return "".hashCode() == 0;
}
```
""",
}

R["java.util.List"] = {
"java.util.List#size()": """For non-negative size:
```java
boolean checkSizeNonNegative(List<?> list) {
    return list.size() >= 0;
}
```
""",
"java.util.List#isEmpty()": """```java
/**
 * Test oracle for checking if isEmpty correctly identifies an empty list.
 *
 * @param list the list to check
 * @return true if isEmpty returns true for an empty list and false for a
 *         non-empty list, false otherwise
 */
boolean checkIsEmpty(List<?> list) {
    boolean empty = list.isEmpty();
    if (list.size() == 0) {
        return empty; // Should be true if the list is indeed empty
    } else {
        return !empty; // Should be false if the list is not empty
    }
}
```
""",
"java.util.List#contains(Object)": """For membership:
```java
boolean checkContains(List<?> list, Object o) {
    boolean found = false;
    for (Object e : list) {
        if (Objects.equals(o, e)) found = true;
    }
    return list.contains(o) == found;
}
```
""",
"java.util.List#add(E)": """For appending at the end:
```java
<E> boolean checkAddAppends(List<E> list, E e) {
    int before = list.size();
    try {
        boolean changed = list.add(e);
        return changed && list.size() == before + 1 && Objects.equals(list.get(before), e);
    } catch (UnsupportedOperationException ex) {
        return list.size() == before;
    }
}
```
""",
"java.util.List#remove(Object)": """```java
/**
 * Test oracle for checking if remove(Object o) correctly removes the first occurrence of the element.
 *
 * @param list the list to be checked
 * @param o    the element to be removed
 * @return true if the element is correctly removed and method return true false otherwise
 */
<E> boolean checkElementRemoval(List<E> list, E o) {
    int originalSize = list.size();
    boolean contains = list.contains(o);
    boolean result = list.remove(o);
    boolean newSizeCorrect = list.size() == (contains ? originalSize - 1 : originalSize);
    return result == contains && newSizeCorrect;
}
```
""",
"java.util.List#get(int)": """For the index range:
```java
boolean checkGetIndexRange(List<?> list, int index) {
    try {
        list.get(index);
        return index >= 0 && index < list.size();
    } catch (IndexOutOfBoundsException e) {
        return index < 0 || index >= list.size();
    }
}
```
""",
}

R["java.util.Map"] = {
"java.util.Map#size()": """For non-negative size:
```java
boolean checkMapSizeNonNegative(Map<?, ?> map) {
    return map.size() >= 0;
}
```
""",
"java.util.Map#isEmpty()": """For isEmpty agreeing with size:
```java
boolean checkMapIsEmpty(Map<?, ?> map) {
    return map.isEmpty() == (map.size() == 0);
}
```
""",
"java.util.Map#get(Object)": """For a missing key:
```java
boolean checkGetMissingKey(Map<K, V> map, Object key) {
    if (map.containsKey(key)) return true;
    return map.get(key) == null;
}
```
""",
"java.util.Map#put(K,V)": """For put followed by get:
```java
boolean checkPutThenGet(Map<K, V> map, K key, V value) {
    V previous = map.get(key);
    try {
        V returned = map.put(key, value);
        return Objects.equals(returned, previous) && Objects.equals(map.get(key), value);
    } catch (UnsupportedOperationException e) {
        return true;
    }
}
```
""",
"java.util.Map#forEach(BiConsumer)": """For the null action:
```java
boolean checkForEachNullAction(Map<K, V> map) {
    try {
        map.forEach(null);
        return false;
    } catch (NullPointerException e) {
        return true;
    }
}
```

For concurrent modification:
```java
boolean checkConcurrentModificationException(Map map, BiConsumer<? super K, ? super V> action) {
    try {
        Iterator<Map.Entry<K, V>> it = map.entrySet().iterator();
        if (it.hasNext()) {
            map.remove(it.next().getKey()); // Modify map during iteration
        }
        map.forEach(action); // Attempt to perform action after modification
        return false; // If it reaches here, no ConcurrentModificationException was thrown
    } catch (ConcurrentModificationException e) {
        return true; // Correct behavior, exception was thrown
    }
}
```
""",
}

R["java.util.Set"] = {
"java.util.Set#size()": """For the cardinality property, the test oracle is:
```java
boolean checkSizeMatchesStream(Set<?> set) {
    int actual = set.stream().count();
    return actual == set.size();
}
```
""",
"java.util.Set#isEmpty()": """For isEmpty agreeing with size:
```java
boolean checkSetIsEmpty(Set<?> set) {
    return set.isEmpty() == (set.size() == 0);
}
```
""",
"java.util.Set#add(E)": """For no duplicates:
```java
<E> boolean checkAddNoDuplicate(Set<E> set, E e) {
    boolean present = set.contains(e);
    int before = set.size();
    boolean added = set.add(e);
    return added == !present && set.size() == (present ? before : before + 1);
}
```

For unsupported add:
```java
<E> boolean checkAddUnsupported(Set<E> set, E e) {
    try {
        set.add(e);
        return true;
    } catch (UnsupportedOperationException ex) {
        return set.size() >= 0;
    }
}
```
""",
"java.util.Set#contains(Object)": """For membership:
```java
boolean checkSetContains(Set<?> set, Object o) {
    return set.contains(o) == set.stream().anyMatch(e -> Objects.equals(o, e));
}
```
""",
}

OUT.mkdir(parents=True, exist_ok=True)
for fqcn, answers in R.items():
    (OUT / f"{fqcn}.json").write_text(json.dumps(answers, indent=2) + "\n")
