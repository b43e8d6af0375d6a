public class Point {
    private int x;
    private int y;

    public Point(int x, int y) {
        this.x = x;
        this.y = y;
    }

    // Exact-type comparison keeps equals symmetric across subclasses.
    public boolean equals(Object o) {
        if (o == null || o.getClass() != getClass()) { return false; }
        Point p = (Point) o;
        return (this.x == p.x) && (this.y == p.y);
    }

    public int hashCode() {
        return 31 * x + y;
    }
}
