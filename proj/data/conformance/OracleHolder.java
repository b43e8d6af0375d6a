import java.util.*;
import java.util.concurrent.*;
import java.util.function.*;
import java.util.stream.*;

// Generated oracles for java.lang.Object.
@SuppressWarnings({"unchecked", "rawtypes"})
class OracleHolder_java_lang_Object<E, K, V, T> {

    // @oracle-id java.lang.Object#hashCode()#2
    boolean checkEqualsHashCodeConsistency(Object x, Object y) {
        if (x != null && y != null && x.equals(y)) {
            return x.hashCode() == y.hashCode();
        }
        return true;
    }

    // @oracle-id java.lang.Object#equals(Object)#1
    boolean checkReflexive(Object x) {
        return x != null ? x.equals(x) : true;
    }

    // @oracle-id java.lang.Object#equals(Object)#2
    boolean checkSymmetric(Object x, Object y) {
        if (x == null || y == null) return x == y;
        return x.equals(y) == y.equals(x);
    }
}
