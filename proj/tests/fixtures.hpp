#pragma once

#include <string>
#include <vector>

#include "twcy/presentation.hpp"

namespace fixtures {

using twcy::Matrix;
using twcy::Rational;

inline Matrix qplane_q() { return Matrix({{1, 2}, {Rational(1, 2), 1}}); }
inline Matrix comm_q() { return Matrix({{1, 1}, {1, 1}}); }
inline Matrix qaff3_q() { return Matrix({{1, 2, 3}, {Rational(1, 2), 1, 5}, {Rational(1, 3), Rational(1, 5), 1}}); }
inline Matrix qplane_m() { return Matrix({{0, -2}, {1, 0}}); }
inline Matrix jordan_m() { return Matrix({{1, 1}, {0, 1}}); }
inline Matrix nondiag_m() { return Matrix({{2, 1}, {1, 1}}); }

inline twcy::QuadraticPresentation qplane() { return twcy::quantum_affine(qplane_q()); }
inline twcy::QuadraticPresentation comm() { return twcy::quantum_affine(comm_q()); }
inline twcy::QuadraticPresentation qaff3() { return twcy::quantum_affine(qaff3_q()); }
inline twcy::QuadraticPresentation qplane_via_m() { return twcy::dimension2_m(qplane_m()); }
inline twcy::QuadraticPresentation jordan() { return twcy::dimension2_m(jordan_m()); }
inline twcy::QuadraticPresentation nondiag() { return twcy::dimension2_m(nondiag_m()); }

struct Named {
    std::string name;
    twcy::QuadraticPresentation p;
};

inline std::vector<Named> all()
{
    return {{"qplane", qplane()}, {"comm", comm()},       {"qaff3", qaff3()},
            {"qplane-M", qplane_via_m()}, {"jordan", jordan()}, {"M-nondiag", nondiag()}};
}

}  // namespace fixtures
