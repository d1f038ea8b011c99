#include "lieherm/tpoly.hpp"

#include <algorithm>

namespace lieherm {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = rat_num(r), den = rat_den(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::optional<std::vector<Rational>> rational_roots(const TPoly& p) {
  switch (p.degree()) {
    case -1:
      return std::nullopt;
    case 0:
      return std::vector<Rational>{};
    case 1:
      return std::vector<Rational>{-p.c0 / p.c1};
    default: {
      const Rational disc = p.c1 * p.c1 - 4 * p.c0 * p.c2;
      if (disc < 0) return std::vector<Rational>{};
      const auto s = exact_sqrt(disc);
      if (!s) return std::nullopt;
      std::vector<Rational> roots{(-p.c1 - *s) / (2 * p.c2),
                                  (-p.c1 + *s) / (2 * p.c2)};
      std::sort(roots.begin(), roots.end());
      if (roots[0] == roots[1]) roots.pop_back();
      return roots;
    }
  }
}

} // namespace lieherm
