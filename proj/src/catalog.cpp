#include "malcev/catalog.hpp"

#include "malcev/errors.hpp"

namespace malcev {

namespace {

Vec unit_scaled(std::size_t n, std::size_t k, long c) {
  Vec v = zero_vec(n);
  v[k] = c;
  return v;
}

Algebra make_abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return Algebra("abelian" + std::to_string(n), std::move(labels), {});
}

Algebra make_sl2() {
  return Algebra("sl2", {"h", "e", "f"},
                 {{0, 1, unit_scaled(3, 1, 2)},
                  {0, 2, unit_scaled(3, 2, -2)},
                  {1, 2, unit_scaled(3, 0, 1)}});
}

Algebra make_cross3() {
  return Algebra("cross3", {"e1", "e2", "e3"},
                 {{0, 1, unit_scaled(3, 2, 1)},
                  {1, 2, unit_scaled(3, 0, 1)},
                  {2, 0, unit_scaled(3, 1, 1)}});
}

Algebra make_heisenberg3() {
  return Algebra("heisenberg3", {"x", "y", "z"}, {{0, 1, unit_scaled(3, 2, 1)}});
}

// Commutators of the imaginary octonions e1..e7: each line (a,b,c) of the
// Fano plane below multiplies cyclically, ea eb = ec, so [ea,eb] = 2 ec.
// The validator pins this orientation: it must pass the linearized identity
// and fail Jacobi.
Algebra make_m7() {
  static const std::size_t fano[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                         {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= 7; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Algebra::Entry> entries;
  for (const auto& line : fano)
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t a = line[r] - 1;
      const std::size_t b = line[(r + 1) % 3] - 1;
      const std::size_t c = line[(r + 2) % 3] - 1;
      entries.push_back({a, b, unit_scaled(7, c, 2)});
    }
  return Algebra("M7", std::move(labels), entries);
}

Algebra make_solv4() {
  return Algebra("solv4", {"e1", "e2", "e3", "e4"},
                 {{0, 1, unit_scaled(4, 1, 1)},
                  {0, 2, unit_scaled(4, 2, 1)},
                  {0, 3, unit_scaled(4, 3, -1)},
                  {1, 2, unit_scaled(4, 3, 1)}});
}

std::vector<Algebra> build() {
  std::vector<Algebra> all;
  all.push_back(make_abelian(1));
  all.push_back(make_abelian(2));
  all.push_back(make_abelian(3));
  all.push_back(make_sl2());
  all.push_back(make_cross3());
  all.push_back(make_heisenberg3());
  all.push_back(make_m7());
  all.push_back(make_solv4());
  all.push_back(direct_sum(make_sl2(), make_m7()));
  return all;
}

}  // namespace

const std::vector<Algebra>& catalog() {
  static const std::vector<Algebra> entries = build();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& a : catalog()) names.push_back(a.name());
  return names;
}

const Algebra& catalog_algebra(const std::string& name) {
  for (const auto& a : catalog())
    if (a.name() == name) return a;
  throw Error(Errc::UnknownAlgebra, name);
}

}  // namespace malcev
