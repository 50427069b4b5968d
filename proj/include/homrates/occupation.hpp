#pragma once

#include <compare>
#include <string>

namespace homrates {

// Photon counts in the four output modes of the balanced splitter:
// j in spatial output a, k in its orthogonal companion mode a_perp,
// l in spatial output b, m in b_perp. Detectors see spatial outputs only,
// so observable totals are n_a = j + k and n_b = l + m.
struct Occupation4 {
    int j = 0;
    int k = 0;
    int l = 0;
    int m = 0;

    int n_a() const { return j + k; }
    int n_b() const { return l + m; }
    int total() const { return j + k + l + m; }

    // canonical (lexicographic) order; state iteration and CSV output rely on it
    friend auto operator<=>(const Occupation4&, const Occupation4&) = default;
};

inline std::string to_string(const Occupation4& o) {
    return "(" + std::to_string(o.j) + "," + std::to_string(o.k) + "," +
           std::to_string(o.l) + "," + std::to_string(o.m) + ")";
}

}  // namespace homrates
