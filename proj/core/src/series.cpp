#include "motconf/series.hpp"

#include <algorithm>

namespace motconf {

namespace {

void gen_monomials(const SeriesLayout& layout, int var, long remaining,
                   std::vector<Monomial::Entry>& stack, std::vector<Monomial>& out) {
  if (var > layout.num_vars) {
    if (!stack.empty()) out.push_back(Monomial(stack));
    return;
  }
  long w = layout.weights[var - 1];
  for (long e = 0; e * w <= remaining; ++e) {
    if (e > 0) stack.emplace_back(var, static_cast<int>(e));
    gen_monomials(layout, var + 1, remaining - e * w, stack, out);
    if (e > 0) stack.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const SeriesLayout& layout, long maxdeg) {
  std::vector<Monomial> out;
  std::vector<Monomial::Entry> stack;
  gen_monomials(layout, 1, maxdeg, stack, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    long da = layout.wdeg(a), db = layout.wdeg(b);
    if (da != db) return da < db;
    return Monomial::cmp(a, b) < 0;
  });
  return out;
}

}  // namespace motconf
