#include "ltpair/interpolate.hpp"

#include <set>
#include <sstream>

namespace ltpair::local {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
}

bool is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Rational eval(const Poly& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Remainder and quotient of a / b over Q.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  trim(a);
  while (!is_zero(a) && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// One nonzero kernel vector of an integer matrix, or empty if the kernel is trivial.
// Forward elimination is fraction-free (Bareiss); back substitution is over Q.
std::vector<Rational> kernel_vector(std::vector<std::vector<BigInt>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_cols;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivot_cols.size() == cols) return {};

  std::set<std::size_t> pivots(pivot_cols.begin(), pivot_cols.end());
  std::size_t free_col = 0;
  while (pivots.count(free_col)) ++free_col;

  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (std::size_t i = pivot_cols.size(); i-- > 0;) {
    const std::size_t c = pivot_cols[i];
    Rational s = 0;
    for (std::size_t j = c + 1; j < cols; ++j) s += Rational(a[i][j]) * x[j];
    x[c] = -s / Rational(a[i][c]);
  }
  return x;
}

std::string poly_string(const Poly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    const bool unit = c == 1;
    if (!unit || i == 0) os << (denominator_of(c) == 1 ? numerator_of(c).str() : to_fraction_string(c));
    if (i > 0) os << (unit ? "" : "*") << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Rational RationalFunction::operator()(const Rational& x) const {
  Rational q = eval(denominator, x);
  if (q == 0) throw InvalidArgument("rational function: denominator vanishes at " + to_fraction_string(x));
  return eval(numerator, x) / q;
}

std::string RationalFunction::to_string(const std::string& var) const {
  return "(" + poly_string(numerator, var) + ")/(" + poly_string(denominator, var) + ")";
}

RationalFunction interpolate_rational(const std::vector<std::pair<Rational, Rational>>& points,
                                      std::size_t max_degree) {
  if (points.size() < 2 * max_degree + 2)
    throw InvalidArgument("interpolate_rational: need at least " + std::to_string(2 * max_degree + 2) +
                          " points, got " + std::to_string(points.size()));
  std::set<Rational> xs;
  for (const auto& pt : points)
    if (!xs.insert(pt.first).second)
      throw InvalidArgument("interpolate_rational: repeated abscissa " + to_fraction_string(pt.first));

  for (std::size_t total = 0; total <= 2 * max_degree; ++total) {
    for (std::size_t dd = 0; dd <= std::min(total, max_degree); ++dd) {
      const std::size_t dn = total - dd;
      if (dn > max_degree) continue;
      const std::size_t cols = dn + dd + 2;
      // Row i: sum_j a_j x^j - y sum_j b_j x^j = 0, scaled to integers.
      std::vector<std::vector<BigInt>> rows;
      for (const auto& [x, y] : points) {
        std::vector<Rational> row(cols);
        Rational xp = 1;
        for (std::size_t j = 0; j <= std::max(dn, dd); ++j) {
          if (j <= dn) row[j] = xp;
          if (j <= dd) row[dn + 1 + j] = -y * xp;
          xp *= x;
        }
        BigInt l = 1;
        for (const auto& v : row) l = boost::multiprecision::lcm(l, denominator_of(v));
        std::vector<BigInt> irow(cols);
        for (std::size_t j = 0; j < cols; ++j) irow[j] = numerator_of(row[j] * Rational(l));
        rows.push_back(std::move(irow));
      }
      auto v = kernel_vector(std::move(rows), cols);
      if (v.empty()) continue;
      Poly p(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dn + 1));
      Poly q(v.begin() + static_cast<std::ptrdiff_t>(dn + 1), v.end());
      trim(p);
      trim(q);
      if (is_zero(q)) continue;
      bool ok = true;
      for (const auto& [x, y] : points) {
        Rational qx = eval(q, x);
        if (qx == 0 || eval(p, x) != y * qx) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (!is_zero(p)) {
        Poly g = gcd(p, q);
        if (g.size() > 1) {
          p = divmod(p, g).first;
          q = divmod(q, g).first;
        }
      } else {
        q = Poly{Rational(1)};
      }
      const Rational lead = q.back();
      for (auto& c : p) c /= lead;
      for (auto& c : q) c /= lead;
      return RationalFunction{p, q};
    }
  }
  throw Error("interpolate_rational: no consistent rational function of degree <= " + std::to_string(max_degree));
}

}  // namespace ltpair::local
