#pragma once

#include <cstdlib>
#include <string>

namespace bonn {

// eps_geom: predicates (coplanarity, extremality).
// eps_vol:  relative volume comparisons.
// eps_eq:   relative equality detection in inequality chains.
// eps_wit:  witness reconstruction, relative to body diameter.
struct Tolerances {
    double eps_geom = 1e-9;
    double eps_vol = 1e-6;
    double eps_eq = 1e-6;
    double eps_wit = 1e-6;

    static Tolerances defaults() { return {}; }

    // BONNESEN_TOLERANCE_PROFILE=strict scales (eps_eq, eps_wit) by 0.1.
    static Tolerances from_env() {
        Tolerances t;
        if (const char* p = std::getenv("BONNESEN_TOLERANCE_PROFILE")) {
            if (std::string(p) == "strict") {
                t.eps_eq *= 0.1;
                t.eps_wit *= 0.1;
            }
        }
        return t;
    }
};

}  // namespace bonn
