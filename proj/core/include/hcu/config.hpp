#pragma once

#include "hcu/errors.hpp"

namespace hcu {

enum class Scheme { OldCU, NewLcdCU };

// What variables the piecewise-linear slopes are limited in. The classical
// scheme limits the conserved variables; the LCD scheme limits local
// characteristic variables. Either flux accepts either reconstruction.
enum class Reconstruction { Conservative, Characteristic };

struct SchemeConfig {
    Scheme scheme = Scheme::NewLcdCU;
    double gamma = 1.4;
    double cfl = 0.4;
    double epsilon = 1e-10;  // desingularization threshold for speed gaps
    Reconstruction reconstruction = Reconstruction::Characteristic;

    // Default reconstruction follows the scheme: conservative-variable
    // limiting for OldCU, characteristic for NewLcdCU.
    static SchemeConfig make(Scheme s, double gamma = 1.4) {
        SchemeConfig c;
        c.scheme = s;
        c.gamma = gamma;
        c.reconstruction = (s == Scheme::OldCU) ? Reconstruction::Conservative
                                                : Reconstruction::Characteristic;
        return c;
    }

    void validate() const {
        if (!(gamma > 1.0)) throw ConfigError("gamma must be > 1");
        if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must be in (0, 1]");
        if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
    }
};

inline const char* scheme_name(Scheme s) {
    return s == Scheme::OldCU ? "old" : "new";
}

}  // namespace hcu
