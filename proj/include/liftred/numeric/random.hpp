#pragma once

#include <random>

#include "liftred/chart/tensor.hpp"

namespace liftred {

/// Small rational n/d with |n| <= range and 1 <= d <= 3.
inline Rational random_rational(std::mt19937_64 &rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return make_rational(num(rng), den(rng));
}

/// Up to `max_terms` monomials of total degree <= max_degree.
inline Polynomial random_polynomial(const Chart &chart, std::mt19937_64 &rng, unsigned max_degree,
                                    std::size_t max_terms = 4) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, chart.dim() == 0 ? 0 : chart.dim() - 1);
    Polynomial::TermMap terms;
    const std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
        Polynomial::Exponents e(chart.dim(), 0);
        const unsigned d = chart.dim() == 0 ? 0 : deg(rng);
        for (unsigned s = 0; s < d; ++s) ++e[var(rng)];
        terms[e] += random_rational(rng);
    }
    return Polynomial::from_terms(chart.coords(), terms);
}

template <class Kind>
AlternatingField<Kind> random_field(const Chart &chart, std::size_t degree, std::mt19937_64 &rng, unsigned max_degree) {
    AlternatingField<Kind> out(chart, degree);
    // Every increasing multi-index of the given length.
    std::vector<MultiIndex> indices;
    MultiIndex cur;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (cur.size() == degree) {
            indices.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < chart.dim(); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (const auto &idx : indices) out.add(idx, random_polynomial(chart, rng, max_degree));
    return out;
}

inline DifferentialForm random_form(const Chart &chart, std::size_t degree, std::mt19937_64 &rng, unsigned max_degree) {
    return random_field<FormKind>(chart, degree, rng, max_degree);
}

inline Multivector random_multivector(const Chart &chart, std::size_t degree, std::mt19937_64 &rng,
                                      unsigned max_degree) {
    return random_field<VectorKind>(chart, degree, rng, max_degree);
}

} // namespace liftred
