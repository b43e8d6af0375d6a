public class Point3D extends Point {
    private int z;

    public Point3D(int x, int y, int z) {
        super(x, y);
        this.z = z;
    }

    public boolean equals(Object o) {
        if (! (o instanceof Point3D)) { return false; }
        Point3D p = (Point3D) o;
        return super.equals(p) && (z == p.z);
    }
}
