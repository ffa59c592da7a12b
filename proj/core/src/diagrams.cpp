#include "lefdec/diagrams.hpp"

#include <algorithm>

#include "lefdec/errors.hpp"
#include "lefdec/parallel.hpp"
#include "lefdec/tensor.hpp"

namespace lefdec {

namespace {

void enumerate_rec(int n, std::vector<int>& free_slots,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<DecoratedMatching>& out) {
  if (free_slots.empty()) {
    DecoratedMatching mu;
    mu.n = n;
    mu.pairs = acc;
    mu.decorations.assign(acc.size(), 0);
    out.push_back(std::move(mu));
    return;
  }
  int lo = free_slots.front();
  for (size_t pick = 1; pick < free_slots.size(); ++pick) {
    int hi = free_slots[pick];
    std::vector<int> rest;
    rest.reserve(free_slots.size() - 2);
    for (size_t k = 1; k < free_slots.size(); ++k)
      if (k != pick) rest.push_back(free_slots[k]);
    acc.emplace_back(lo, hi);
    enumerate_rec(n, rest, acc, out);
    acc.pop_back();
  }
}

void validate_matching(const DecoratedMatching& mu, int e_count) {
  if (mu.n < 1) throw InvalidParams("matching: n must be >= 1");
  std::vector<bool> used(2 * mu.n, false);
  if (static_cast<int>(mu.pairs.size()) != mu.n)
    throw InvalidParams("matching: expected n pairs");
  for (auto [a, b] : mu.pairs) {
    if (a < 0 || b < 0 || a >= 2 * mu.n || b >= 2 * mu.n || a == b ||
        used[a] || used[b])
      throw InvalidParams("matching: not a perfect matching of 2n slots");
    used[a] = used[b] = true;
  }
  if (mu.decorations.size() != mu.pairs.size())
    throw InvalidParams("matching: one decoration per pair required");
  for (int d : mu.decorations)
    if (d < 0 || d >= e_count)
      throw InvalidParams("matching: decoration index out of range");
}

}  // namespace

std::vector<DecoratedMatching> enumerate_matchings(int n) {
  std::vector<int> slots(2 * n);
  for (int k = 0; k < 2 * n; ++k) slots[k] = k;
  std::vector<std::pair<int, int>> acc;
  std::vector<DecoratedMatching> out;
  enumerate_rec(n, slots, acc, out);
  return out;
}

Mat matching_to_operator(const DecoratedMatching& mu,
                         const PolarizedData& data) {
  validate_matching(mu, static_cast<int>(data.e_basis().size()));
  const Field* f = data.field();
  const int n = mu.n;
  const int m = data.m();

  struct Strand {
    int a, b, dec;
  };
  std::vector<Strand> through, in_in, out_out;
  for (size_t k = 0; k < mu.pairs.size(); ++k) {
    auto [a, b] = mu.pairs[k];
    if (a > b) std::swap(a, b);
    Strand s{a, b, mu.decorations[k]};
    if (mu.is_through(static_cast<int>(k)))
      through.push_back(s);
    else if (mu.is_in_in(static_cast<int>(k)))
      in_in.push_back(s);
    else
      out_out.push_back(s);
  }
  auto by_first = [](const Strand& x, const Strand& y) { return x.a < y.a; };
  std::sort(through.begin(), through.end(), by_first);
  std::sort(in_in.begin(), in_in.end(), by_first);
  std::sort(out_out.begin(), out_out.end(), by_first);
  const int t = static_cast<int>(through.size());
  const int c = static_cast<int>(in_in.size());

  // input sort: through strands to the front, contracted pairs behind
  Perm sigma = Perm::identity(n);
  for (int k = 0; k < t; ++k) sigma.img[through[k].a] = k;
  for (int j = 0; j < c; ++j) {
    sigma.img[in_in[j].a] = t + 2 * j;
    sigma.img[in_in[j].b] = t + 2 * j + 1;
  }
  // output arrangement: normal position p ends up at the matched out slot
  Perm tau = Perm::identity(n);
  for (int k = 0; k < t; ++k) tau.img[k] = through[k].b - n;
  for (int j = 0; j < c; ++j) {
    tau.img[t + 2 * j] = out_out[j].a - n;
    tau.img[t + 2 * j + 1] = out_out[j].b - n;
  }

  Mat normal = Mat::identity(f, 1);
  {
    std::int64_t left = 1;
    for (int k = 0; k < t; ++k) left *= m;
    normal = Mat::identity(f, static_cast<int>(left));
    if (c > 0) {
      Mat cup_cap = copairing_iota(data.phi()) * pairing_pi(data.phi());
      for (int j = 0; j < c; ++j) normal = normal.kron(cup_cap);
    }
  }

  Mat op = signed_perm(f, tau, m) * normal * signed_perm(f, sigma, m);
  // decorations: one endomorphism per strand; out-out strands have no input
  // slot, so theirs composes after the creation map
  for (int k = 0; k < t; ++k)
    op = op * factor_embed(data.e_basis()[through[k].dec], through[k].a + 1, n);
  for (int j = 0; j < c; ++j)
    op = op * factor_embed(data.e_basis()[in_in[j].dec], in_in[j].a + 1, n);
  for (int j = 0; j < c; ++j)
    op = factor_embed(data.e_basis()[out_out[j].dec], out_out[j].a - n + 1, n) *
         op;
  return op;
}

OperatorSpan diagram_span(const PolarizedData& data, int n,
                          std::int64_t max_operator_dim) {
  if (n < 1) throw InvalidParams("diagram_span: n must be >= 1");
  const int m = data.m();
  std::int64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= m;
    if (dim > max_operator_dim) throw SizeBudgetExceeded(dim, max_operator_dim);
  }
  const int e_count = static_cast<int>(data.e_basis().size());
  std::vector<DecoratedMatching> all;
  for (const DecoratedMatching& plain : enumerate_matchings(n)) {
    // decoration tuples in lexicographic order
    std::vector<int> dec(plain.pairs.size(), 0);
    for (;;) {
      DecoratedMatching mu = plain;
      mu.decorations = dec;
      all.push_back(std::move(mu));
      int pos = static_cast<int>(dec.size()) - 1;
      while (pos >= 0 && dec[pos] == e_count - 1) dec[pos--] = 0;
      if (pos < 0) break;
      ++dec[pos];
    }
  }
  std::vector<Mat> ops(all.size());
  parallel_for(all.size(),
               [&](size_t i) { ops[i] = matching_to_operator(all[i], data); });
  return OperatorSpan::from_mats(data.field(), static_cast<int>(dim), ops);
}

}  // namespace lefdec
