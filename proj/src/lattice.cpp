#include "layerslab/lattice.hpp"

#include <cstdlib>

namespace layerslab {

long long LatticePoint::l1_norm() const {
    long long s = 0;
    for (std::int32_t c : x) s += std::llabs(c);
    return s;
}

LatticePoint LatticePoint::shifted(int axis, int delta) const {
    LatticePoint p = *this;
    p.x[axis] += delta;
    return p;
}

LatticePoint origin(int d) {
    LatticePoint p;
    p.x.assign(d, 0);
    return p;
}

bool lazy_younger(const LazyAgeSource& src, const LatticePoint& u, const LatticePoint& v) {
    std::uint64_t au = src.age(u), av = src.age(v);
    if (au == av && !(u == v)) throw TiesDetected();
    return au < av;
}

int lattice_layer(const LazyAgeSource& src, const LatticePoint& p) {
    const std::uint64_t ap = src.age(p);
    int younger = 0;
    LatticePoint q = p;
    for (int axis = 0; axis < p.dim(); ++axis) {
        for (int delta : {-1, +1}) {
            q.x[axis] = p.x[axis] + delta;
            std::uint64_t aq = src.age(q);
            if (aq == ap) throw TiesDetected();
            younger += aq < ap;
        }
        q.x[axis] = p.x[axis];
    }
    return 1 + younger;
}

} // namespace layerslab
