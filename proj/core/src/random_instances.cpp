#include "dwedge/random_instances.hpp"

#include <random>

namespace dwedge {

std::vector<DoubleWedge> random_wedges(const RandomWedgeConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    auto rnd = [&](long lo, long hi) {
        return long(lo + long(rng() % std::uint64_t(hi - lo + 1)));
    };
    const long R = cfg.coord_range;

    std::vector<DoubleWedge> out;
    out.reserve(cfg.n);
    while (int(out.size()) < cfg.n) {
        bool hourglass = rnd(0, 99) < cfg.hourglass_percent;
        long a1, a2;
        if (cfg.ensure_uncovered) {
            if (hourglass) {
                a1 = rnd(1, R);
                a2 = -rnd(1, R);
            } else {
                long sign = rnd(0, 1) ? 1 : -1;
                a1 = sign * rnd(1, R);
                a2 = sign * rnd(1, R);
            }
        } else {
            a1 = rnd(-R, R);
            a2 = rnd(-R, R);
        }
        if (a1 == a2) continue;
        long b1 = rnd(-R, R);
        long b2 = rnd(-R, R);
        out.emplace_back(Line{Rational(a1), Rational(b1)}, Line{Rational(a2), Rational(b2)},
                         hourglass ? +1 : -1, cfg.closed);
    }
    return out;
}

}  // namespace dwedge
