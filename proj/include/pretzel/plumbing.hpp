#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pretzel/goeritz.hpp"
#include "pretzel/params.hpp"

namespace pretzel {

// Seifert invariants (e0; (a1,b1), ..., (al,bl)) with a > 0, 0 < b < a,
// gcd(a,b) = 1 per leg. Orbifold Euler number e = e0 + sum(b_i / a_i).
struct SeifertLeg {
    long long alpha = 0;
    long long beta = 0;
    bool operator==(const SeifertLeg&) const = default;
};

struct SeifertInvariants {
    long long e0 = 0;
    std::vector<SeifertLeg> legs;

    Rational euler() const;
    void validate() const; // throws InvalidPresentation
    bool operator==(const SeifertInvariants&) const = default;
    std::string str() const;
};

// Seifert presentation of the double branched cover. When mirror is true the
// presentation is of Sigma_2(-P(p,q,r)) instead (the branch with
// 1/p + 1/q + 1/r < 0).
struct SeifertPresentation {
    SeifertInvariants seifert;
    bool mirror = false;
};

// Requires p >= 2 even, q <= -2, r >= 2. Branches on the sign of
// 1/p + 1/q + 1/r:
//   > 0: (-2; (p, p-1), (-q, 1), (r, r-1)), mirror = false
//   < 0: (-1; (p, 1), (-q, -q-1), (r, 1)),  mirror = true
// Throws PreconditionViolated / ZeroEuler.
SeifertPresentation seifert_presentation(const PretzelParams& params);

// True iff the canonical form of the triple admits seifert_presentation.
bool in_plumbing_region(const PretzelParams& canonical_params);

// Negative continued fraction [c1, ..., ck], all ci <= -2, with
// c1 - 1/(c2 - 1/(... - 1/ck)) = num/den. Requires den > 0, gcd = 1 and
// num/den < -1 (the value -1 itself has no such expansion).
std::vector<long long> negative_continued_fraction(long long num, long long den);

// Star-shaped plumbing tree: one central vertex and three chains. The first
// entry of each leg is adjacent to the center.
struct PlumbingGraph {
    long long center = 0;
    std::vector<std::vector<long long>> legs;

    int vertex_count() const;
    SymIntMatrix intersection_matrix() const;
    nlohmann::json to_json() const; // {center, legs: [[w,...],...]}
};

// Converts Seifert invariants to the plumbing graph: center weight e0, leg i
// the negative continued fraction of -alpha_i/beta_i. Exactly three legs
// required (star shape); throws InvalidPresentation otherwise.
PlumbingGraph plumbing_graph(const SeifertInvariants& s);

// True iff the intersection matrix has signature -n.
bool is_negative_definite(const PlumbingGraph& g);

} // namespace pretzel
