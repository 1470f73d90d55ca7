#include "helpers.hpp"

namespace trialab::testing {

namespace {

Vec unit(int dim, int i) { return unit_vec(dim, i); }

}  // namespace

ViolationReport oracle_check_structure(const Algebra& a) {
  const int n = a.dim();
  ViolationReport report;

  if (a.kind() == AlgebraKind::Associative) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const Vec lhs = a.evaluate(Slot::Bracket, a.evaluate(Slot::Bracket, unit(n, x), unit(n, y)), unit(n, z));
          const Vec rhs = a.evaluate(Slot::Bracket, unit(n, x), a.evaluate(Slot::Bracket, unit(n, y), unit(n, z)));
          if (!is_zero(lhs - rhs)) report.add("assoc", {x, y, z}, lhs - rhs);
        }
    report.sort();
    return report;
  }

  if (a.kind() == AlgebraKind::Leibniz) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const Vec ex = unit(n, x), ey = unit(n, y), ez = unit(n, z);
          const auto br = [&](const Vec& u, const Vec& v) { return a.evaluate(Slot::Bracket, u, v); };
          const Vec diff = br(br(ex, ey), ez) - br(ex, br(ey, ez)) - br(br(ex, ez), ey);
          if (!is_zero(diff)) report.add("leibniz", {x, y, z}, diff);
        }
    report.sort();
    return report;
  }

  if (a.kind() == AlgebraKind::Triassociative) {
    const auto L = [&](const Vec& u, const Vec& v) { return a.evaluate(Slot::Left, u, v); };
    const auto M = [&](const Vec& u, const Vec& v) { return a.evaluate(Slot::Middle, u, v); };
    const auto R = [&](const Vec& u, const Vec& v) { return a.evaluate(Slot::Right, u, v); };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
          const std::vector<int> w{i, j, k};
          const auto check = [&](const char* id, const Vec& lhs, const Vec& rhs) {
            if (!is_zero(lhs - rhs)) report.add(id, w, lhs - rhs);
          };
          check("tri-(1)", L(L(x, y), z), L(x, L(y, z)));
          check("tri-(2)", R(R(x, y), z), R(x, R(y, z)));
          check("tri-(3)", M(M(x, y), z), M(x, M(y, z)));
          check("tri-(4)", L(L(x, y), z), L(x, R(y, z)));
          check("tri-(5)", L(L(x, y), z), L(x, M(y, z)));
          check("tri-(6)", L(R(x, y), z), R(x, L(y, z)));
          check("tri-(7)", R(L(x, y), z), R(x, R(y, z)));
          check("tri-(8)", R(M(x, y), z), R(x, R(y, z)));
          check("tri-(9)", L(M(x, y), z), M(x, L(y, z)));
          check("tri-(10)", M(L(x, y), z), M(x, R(y, z)));
          check("tri-(11)", M(R(x, y), z), R(x, M(y, z)));
        }
    report.sort();
    return report;
  }

  // ternary Leibniz
  const auto br = [&](const Vec& u, const Vec& v, const Vec& w) { return a.evaluate(u, v, w); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t)
          for (int u = 0; u < n; ++u) {
            const Vec ex = unit(n, x), ey = unit(n, y), ez = unit(n, z), et = unit(n, t),
                      eu = unit(n, u);
            const Vec diff = br(br(ex, ey, ez), et, eu) - br(ex, ey, br(ez, et, eu)) -
                             br(ex, br(ey, et, eu), ez) - br(br(ex, et, eu), ey, ez);
            if (!is_zero(diff)) report.add("ternary-leibniz", {x, y, z, t, u}, diff);
          }
  report.sort();
  return report;
}

std::vector<Algebra> exhaustive_dim2_leibniz_family() {
  std::vector<Algebra> family;
  // 8 structure coefficients c[i][j][k], each in {-1, 0, 1}
  for (int code = 0; code < 6561; ++code) {
    int rest = code;
    std::vector<BinaryTensor::Entry> entries;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          const int digit = rest % 3;
          rest /= 3;
          if (digit != 0) entries.push_back({i, j, k, digit == 1 ? 1 : -1});
        }
    Algebra a = Algebra::leibniz(BinaryTensor::from_entries(2, std::move(entries)));
    if (check_structure(a).empty()) family.push_back(std::move(a));
  }
  return family;
}

std::vector<Mat> all_matrices(int dim, const std::vector<Rational>& grid) {
  std::vector<Mat> out;
  const std::size_t cells = static_cast<std::size_t>(dim) * dim;
  std::vector<std::size_t> odo(cells, 0);
  while (true) {
    Mat m(dim, dim);
    for (std::size_t c = 0; c < cells; ++c)
      m(static_cast<Index>(c) / dim, static_cast<Index>(c) % dim) = grid[odo[c]];
    out.push_back(std::move(m));
    if (cells == 0) return out;
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < grid.size()) break;
      odo[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace trialab::testing
