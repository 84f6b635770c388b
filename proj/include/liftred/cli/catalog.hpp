#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftred/cli/problem_file.hpp"

namespace liftred {

namespace detail {

struct CatalogEntry {
    std::string_view name;
    std::string_view summary;
    std::string_view text;
};

inline const std::vector<CatalogEntry> &catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"affine-bialgebra", "2-dim nonabelian bialgebra with nonzero cobracket acting on y e_x^e_y", R"(# [e1,e2] = e2 with delta(e2) = e1^e2. The images satisfy
# d phi(e2) = phi(e1)^phi(e2), so axiom (ii) uses the cobracket.
chart M: x, y
poisson: y*e_x^e_y
bialgebra {
  basis: e1, e2
  bracket { [e1,e2] = e2 }
  cocycle { d(e2) = 1 e1^e2 }
}
pgmap {
  phi(e1) = dx
  phi(e2) = dy - y*dx
}
)"},
        {"canonical-r2-rotation", "rotation of the symplectic plane, H = (q^2 + p^2)/2", R"(chart M: q, p
symplectic: dp^dq
pgmap { phi(e1) = q*dq + p*dp }
momentum { J(e1) = 1/2*q^2 + 1/2*p^2 }
action { X(e1) = q*e_p - p*e_q }
)"},
        {"canonical-r4-oscillators", "two independent rotations of canonical R^4", R"(chart M: q1, p1, q2, p2
poisson: e_q1^e_p1 + e_q2^e_p2
pgmap {
  phi(e1) = q1*dq1 + p1*dp1
  phi(e2) = q2*dq2 + p2*dp2
}
momentum {
  J(e1) = 1/2*q1^2 + 1/2*p1^2
  J(e2) = 1/2*q2^2 + 1/2*p2^2
}
action {
  X(e1) = q1*e_p1 - p1*e_q1
  X(e2) = q2*e_p2 - p2*e_q2
}
)"},
        {"dressing-linearized", "linearized dressing action, J = identity, c = fiber projection", R"(# Linear Poisson structure on g* for [e1,e2] = e2; J is the identity.
chart M: x1, x2
poisson: x2*e_x1^e_x2
bialgebra {
  basis: e1, e2
  bracket { [e1,e2] = e2 }
}
pgmap {
  phi(e1) = dx1
  phi(e2) = dx2
}
momentum {
  J(e1) = x1
  J(e2) = x2
}
expect_comomentum {
  c(e1) = v_x1
  c(e2) = v_x2
}
)"},
        {"hamiltonian-level-set", "J = p on canonical R^2 with the level set p = 0", R"(chart M: q, p
poisson: e_q^e_p
pgmap { phi(e1) = dp }
momentum { J(e1) = p }
level_set {
  params: s
  q = s
  p = 0
}
)"},
        {"so3-coadjoint", "coadjoint action on so(3)*, phi(e_i) = dx_i", R"(chart M: x, y, z
poisson: z*e_x^e_y - y*e_x^e_z + x*e_y^e_z
bialgebra {
  basis: e1, e2, e3
  bracket {
    [e1,e2] = e3
    [e2,e3] = e1
    [e3,e1] = e2
  }
}
pgmap {
  phi(e1) = dx
  phi(e2) = dy
  phi(e3) = dz
}
momentum {
  J(e1) = x
  J(e2) = y
  J(e3) = z
}
action {
  X(e1) = z*e_y - y*e_z
  X(e2) = x*e_z - z*e_x
  X(e3) = y*e_x - x*e_y
}
level_set {
  params:
  x = 0
  y = 0
  z = 0
}
)"},
    };
    return entries;
}

} // namespace detail

inline std::vector<std::pair<std::string, std::string>> catalog_listing() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &e : detail::catalog_entries()) out.emplace_back(std::string(e.name), std::string(e.summary));
    return out;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto &e : detail::catalog_entries()) out.emplace_back(e.name);
    return out;
}

inline std::string catalog_text(std::string_view name) {
    for (const auto &e : detail::catalog_entries())
        if (e.name == name) return std::string(e.text);
    std::string names;
    for (const auto &e : detail::catalog_entries()) names += (names.empty() ? "" : ", ") + std::string(e.name);
    throw UnknownCatalogEntry("unknown catalog entry '" + std::string(name) + "'; available: " + names);
}

inline ProblemFile catalog(std::string_view name) {
    return parse_problem(catalog_text(name), "catalog:" + std::string(name));
}

} // namespace liftred
