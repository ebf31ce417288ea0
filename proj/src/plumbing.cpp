#include "pretzel/plumbing.hpp"

#include <numeric>

#include "pretzel/errors.hpp"
#include "pretzel/signature.hpp"

namespace pretzel {

Rational SeifertInvariants::euler() const {
    Rational e = Rational::of(e0);
    for (const auto& leg : legs) e = e + Rational::of(leg.beta, leg.alpha);
    return e;
}

void SeifertInvariants::validate() const {
    for (const auto& leg : legs) {
        if (leg.alpha < 2)
            throw InvalidPresentation("Seifert leg needs alpha >= 2, got alpha = " +
                                      std::to_string(leg.alpha));
        if (leg.beta <= 0 || leg.beta >= leg.alpha)
            throw InvalidPresentation("Seifert leg needs 0 < beta < alpha, got (" +
                                      std::to_string(leg.alpha) + "," + std::to_string(leg.beta) + ")");
        if (std::gcd(leg.alpha, leg.beta) != 1)
            throw InvalidPresentation("Seifert leg (" + std::to_string(leg.alpha) + "," +
                                      std::to_string(leg.beta) + ") is not coprime");
    }
}

std::string SeifertInvariants::str() const {
    std::string out = "(" + std::to_string(e0) + ";";
    for (const auto& leg : legs)
        out += " (" + std::to_string(leg.alpha) + "," + std::to_string(leg.beta) + ")";
    return out + ")";
}

bool in_plumbing_region(const PretzelParams& t) {
    return t.p >= 2 && t.p % 2 == 0 && t.q <= -2 && t.r >= 2;
}

SeifertPresentation seifert_presentation(const PretzelParams& params) {
    long long p = params.p, q = params.q, r = params.r;
    if (!(p >= 2 && p % 2 == 0 && q <= -2 && r >= 2))
        throw PreconditionViolated(
            "Seifert presentation requires p >= 2 even, q <= -2, r >= 2; got " + params.str());
    int es = euler_sum_sign(p, q, r);
    if (es == 0)
        throw ZeroEuler("1/p + 1/q + 1/r = 0 for " + params.str());

    SeifertPresentation out;
    if (es > 0) {
        out.seifert = SeifertInvariants{-2, {{p, p - 1}, {-q, 1}, {r, r - 1}}};
        out.mirror = false;
    } else {
        out.seifert = SeifertInvariants{-1, {{p, 1}, {-q, -q - 1}, {r, 1}}};
        out.mirror = true; // presents the double cover of the mirror knot
    }
    out.seifert.validate();
    return out;
}

std::vector<long long> negative_continued_fraction(long long num, long long den) {
    if (den <= 0)
        throw InvalidFraction("denominator must be positive");
    if (num >= 0)
        throw InvalidFraction("numerator must be negative");
    long long a = -num, b = den;
    if (std::gcd(a, b) != 1)
        throw InvalidFraction("fraction must be reduced");
    if (a <= b)
        throw InvalidFraction("value must be < -1; no expansion with entries <= -2 exists for " +
                              std::to_string(num) + "/" + std::to_string(den));

    std::vector<long long> out;
    while (true) {
        long long c = (a + b - 1) / b; // ceil(a/b) >= 2
        out.push_back(-c);
        long long rem = c * b - a; // in [0, b)
        if (rem == 0) break;
        a = b;
        b = rem;
    }
    return out;
}

int PlumbingGraph::vertex_count() const {
    size_t n = 1;
    for (const auto& leg : legs) n += leg.size();
    return static_cast<int>(n);
}

SymIntMatrix PlumbingGraph::intersection_matrix() const {
    const int n = vertex_count();
    SymIntMatrix m(n);
    m.set(0, 0, center);
    int idx = 1;
    for (const auto& leg : legs) {
        for (size_t j = 0; j < leg.size(); ++j) {
            m.set(idx, idx, leg[j]);
            m.set(idx, j == 0 ? 0 : idx - 1, 1);
            ++idx;
        }
    }
    return m;
}

nlohmann::json PlumbingGraph::to_json() const {
    return nlohmann::json{{"center", center}, {"legs", legs}};
}

PlumbingGraph plumbing_graph(const SeifertInvariants& s) {
    s.validate();
    if (s.legs.size() != 3)
        throw InvalidPresentation("star-shaped plumbing requires exactly 3 legs, got " +
                                  std::to_string(s.legs.size()));
    PlumbingGraph g;
    g.center = s.e0;
    for (const auto& leg : s.legs)
        g.legs.push_back(negative_continued_fraction(-leg.alpha, leg.beta));
    return g;
}

bool is_negative_definite(const PlumbingGraph& g) {
    return matrix_signature(g.intersection_matrix()) == -g.vertex_count();
}

} // namespace pretzel
