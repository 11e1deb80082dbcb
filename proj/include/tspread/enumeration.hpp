#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspread/count.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// k + t(l - 1) + 1, the common maximal index of A^t(k, l).
constexpr int corner_top(int k, int l, int t) { return k + t * (l - 1) + 1; }

/// |M_{n,d,t}| = binom(n - (d-1)(t-1), d).
inline Count card_M(int n, int d, int t) {
  if (n < 1 || d < 0 || t < 1) throw DomainError("card_M: need n >= 1, d >= 0, t >= 1");
  if (d == 0) return 1;
  return binom(static_cast<long long>(n) - static_cast<long long>(d - 1) * (t - 1), d);
}

/// Visits M_{n,d,t} in slex-descending order without materializing it.
/// The visitor receives the support of each monomial.
template <class Visitor>
void for_each_M(int n, int d, int t, Visitor&& visit) {
  if (n < 1 || d < 0 || t < 1) throw DomainError("enumerate_M: need n >= 1, d >= 0, t >= 1");
  if (d == 0) {
    visit(std::span<const int>{});
    return;
  }
  if (1 + static_cast<long long>(t) * (d - 1) > n) return;
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) idx[j] = 1 + t * j;
  while (true) {
    visit(std::span<const int>(idx));
    // Rightmost position that can still move up with a tight tail behind it.
    int j = d - 1;
    while (j >= 0 && idx[j] + 1 > n - t * (d - 1 - j)) --j;
    if (j < 0) return;
    ++idx[j];
    for (int s = j + 1; s < d; ++s) idx[s] = idx[s - 1] + t;
  }
}

inline std::vector<Monomial> enumerate_M(int n, int d, int t) {
  require_cells(card_M(n, d, t), "enumerate_M");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(card_M(n, d, t)));
  for_each_M(n, d, t, [&](std::span<const int> s) {
    out.emplace_back(std::vector<int>(s.begin(), s.end()), Monomial::Unchecked{});
  });
  return out;
}

/// |A^t(k, l)| = binom(k + l - 1, l - 1); independent of t and n.
inline Count card_A(int k, int l) {
  if (k < 0 || l < 1) throw DomainError("card_A: need k >= 0 and l >= 1");
  return binom(k + l - 1, l - 1);
}

inline void require_A_params(int k, int l, const Ambient& amb, const char* op) {
  if (k < 0 || l < 1) throw DomainError(std::string(op) + ": need k >= 0 and l >= 1");
  if (corner_top(k, l, amb.t) > amb.n)
    throw DomainError(std::string(op) + ": k + t(l-1) + 1 = " + std::to_string(corner_top(k, l, amb.t)) +
                      " exceeds n = " + std::to_string(amb.n));
}

inline bool in_A(const Monomial& u, int k, int l, const Ambient& amb) {
  return u.degree() == l && u.max() == corner_top(k, l, amb.t) && u.max() <= amb.n &&
         spread_at_least(u.indices(), amb.t);
}

inline void require_in_A(const Monomial& u, int k, int l, const Ambient& amb, const char* op) {
  require_A_params(k, l, amb, op);
  if (!in_A(u, k, l, amb))
    throw DomainError(std::string(op) + ": " + to_text(u) + " is not in A^" + std::to_string(amb.t) + "(" +
                      std::to_string(k) + "," + std::to_string(l) + ")");
}

/// max A^t(k,l) = x_1 x_{1+t} ... x_{1+t(l-2)} x_{k+t(l-1)+1}.
inline Monomial max_of_A(int k, int l, const Ambient& amb) {
  require_A_params(k, l, amb, "max_of_A");
  std::vector<int> idx;
  for (int j = 0; j < l - 1; ++j) idx.push_back(1 + amb.t * j);
  idx.push_back(corner_top(k, l, amb.t));
  return Monomial(std::move(idx), Monomial::Unchecked{});
}

/// min A^t(k,l) = x_{k+1} x_{k+t+1} ... x_{k+t(l-1)+1}.
inline Monomial min_of_A(int k, int l, const Ambient& amb) {
  require_A_params(k, l, amb, "min_of_A");
  std::vector<int> idx;
  for (int j = 0; j < l; ++j) idx.push_back(k + 1 + amb.t * j);
  return Monomial(std::move(idx), Monomial::Unchecked{});
}

/// A^t(k, l), slex-descending. Its elements are the degree l-1 t-spread
/// monomials on [1, top - t] followed by x_top.
inline std::vector<Monomial> enumerate_A(int k, int l, const Ambient& amb) {
  require_A_params(k, l, amb, "enumerate_A");
  require_cells(card_A(k, l), "enumerate_A");
  const int top = corner_top(k, l, amb.t);
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(card_A(k, l)));
  if (l == 1) {
    out.push_back(Monomial({top}));
    return out;
  }
  for_each_M(top - amb.t, l - 1, amb.t, [&](std::span<const int> s) {
    std::vector<int> idx(s.begin(), s.end());
    idx.push_back(top);
    out.emplace_back(std::move(idx), Monomial::Unchecked{});
  });
  return out;
}

/// The largest element of A^t(k,l) strictly slex-below u, via the last
/// gap of u. Empty when Gap_t(u) is empty (u is the minimum).
inline std::optional<Monomial> successor_in_A(const Monomial& u, int k, int l, const Ambient& amb) {
  require_in_A(u, k, l, amb, "successor_in_A");
  if (l == 1) return std::nullopt;
  GapProfile gaps = gap_profile(u, amb.t);
  if (gaps.empty()) return std::nullopt;
  const int p = gaps.last_position();
  std::vector<int> idx(u.vec().begin(), u.vec().begin() + (p - 1));
  const int start = u.index(p) + 1;
  for (int j = 0; j <= l - p - 1; ++j) idx.push_back(start + amb.t * j);
  idx.push_back(corner_top(k, l, amb.t));
  return Monomial(std::move(idx), Monomial::Unchecked{});
}

/// One summand binom(top, bottom) of a rank decomposition.
struct BinomialTerm {
  long long top = 0;
  long long bottom = 0;
  Count value() const { return binom(top, bottom); }
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

namespace detail {

// Number of t-spread tails c = j_s < j_{s+1} < ... < j_l = top, i.e. the
// block of A^t(k,l) with a fixed value c at position s. Shifting c + t to 1
// turns the tail after c into an element of A^t(top - c - t(l-s), l-s).
inline BinomialTerm tail_block(int c, int s, int l, int top, int t) {
  const int rest = l - s;
  if (rest == 0) return c == top ? BinomialTerm{0, 0} : BinomialTerm{-1, 0};
  const long long k_shift = static_cast<long long>(top) - c - static_cast<long long>(t) * rest;
  if (k_shift < 0) return BinomialTerm{-1, 0};
  return BinomialTerm{k_shift + rest - 1, rest - 1};
}

}  // namespace detail

/// The binomial coefficients whose sum is |[max A^t(k,l), u]|, in the order
/// the gap descent produces them: the first i_1 - 1 coefficients of the
/// decomposition by minimum, then the first wdt(g gap) coefficients of each
/// nested decomposition for g in Gap_t(u / x_max(u)), then binom(0,0) for u.
inline std::vector<BinomialTerm> rank_terms(const Monomial& u, int k, int l, const Ambient& amb) {
  require_in_A(u, k, l, amb, "rank_in_A");
  const int t = amb.t;
  const int top = corner_top(k, l, t);
  std::vector<BinomialTerm> terms;
  if (l >= 2) {
    for (int c = 1; c < u.index(1); ++c) terms.push_back(detail::tail_block(c, 1, l, top, t));
    // A (s-1)-gap of u/x_max offers exactly its width of smaller values at
    // position s, each heading one block of the nested decomposition.
    for (int s = 2; s <= l - 1; ++s)
      for (int c = u.index(s - 1) + t; c < u.index(s); ++c) terms.push_back(detail::tail_block(c, s, l, top, t));
  }
  terms.push_back(BinomialTerm{0, 0});
  return terms;
}

/// |{w in A^t(k,l) : w >=_slex u}|, the 1-based position of u.
inline Count rank_in_A(const Monomial& u, int k, int l, const Ambient& amb) {
  Count sum = 0;
  for (const auto& term : rank_terms(u, k, l, amb)) sum = checked_add(sum, term.value());
  return sum;
}

/// Inverse of rank_in_A for 1 <= rank <= card_A(k, l).
inline Monomial unrank_in_A(Count rank, int k, int l, const Ambient& amb) {
  require_A_params(k, l, amb, "unrank_in_A");
  if (rank < 1 || rank > card_A(k, l))
    throw DomainError("unrank_in_A: rank " + to_string(rank) + " outside [1, " + to_string(card_A(k, l)) + "]");
  const int t = amb.t;
  const int top = corner_top(k, l, t);
  std::vector<int> idx;
  for (int s = 1; s <= l - 1; ++s) {
    int c = s == 1 ? 1 : idx.back() + t;
    while (true) {
      Count block = detail::tail_block(c, s, l, top, t).value();
      if (rank <= block) break;
      rank -= block;
      ++c;
    }
    idx.push_back(c);
  }
  idx.push_back(top);
  return Monomial(std::move(idx), Monomial::Unchecked{});
}

/// [first, last] inside A^t(k, l), first >=_slex last.
struct SlexSegment {
  int k = 0;
  int l = 1;
  Ambient amb;
  Monomial first;
  Monomial last;

  static SlexSegment make(int k, int l, const Ambient& amb, Monomial first, Monomial last) {
    require_in_A(first, k, l, amb, "segment");
    require_in_A(last, k, l, amb, "segment");
    if (slex_cmp(first, last) < 0) throw DomainError("segment: first <_slex last");
    return SlexSegment{k, l, amb, std::move(first), std::move(last)};
  }
  friend bool operator==(const SlexSegment&, const SlexSegment&) = default;
};

/// |[first, last]|
inline Count segment_card(const SlexSegment& seg) {
  if (slex_cmp(seg.first, seg.last) < 0) throw DomainError("segment_card: first <_slex last");
  return rank_in_A(seg.last, seg.k, seg.l, seg.amb) - rank_in_A(seg.first, seg.k, seg.l, seg.amb) + 1;
}

/// |[first, last)|
inline Count left_segment_card(const SlexSegment& seg) { return segment_card(seg) - 1; }

/// The members of the segment, slex-descending.
inline std::vector<Monomial> segment_members(const SlexSegment& seg) {
  Count size = segment_card(seg);
  require_cells(size, "segment_members");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(size));
  std::optional<Monomial> cur = seg.first;
  while (cur) {
    out.push_back(*cur);
    if (*cur == seg.last) break;
    cur = successor_in_A(*cur, seg.k, seg.l, seg.amb);
  }
  return out;
}

/// The bottom segment of A^t(k,l) with exactly `a` elements: it ends at
/// min A^t(k,l) and starts at the a-th monomial counted from the bottom.
inline SlexSegment take_smallest_segment(int k, int l, const Ambient& amb, Count a) {
  require_A_params(k, l, amb, "take_smallest_segment");
  const Count total = card_A(k, l);
  if (a < 1 || a > total)
    throw DomainError("take_smallest_segment: a = " + to_string(a) + " outside [1, " + to_string(total) + "]");
  return SlexSegment{k, l, amb, unrank_in_A(total - a + 1, k, l, amb), min_of_A(k, l, amb)};
}

/// b_i = |{u in A^t(k,l) : min(u) = i}| = binom(k + l - 1 - i, l - 2) for i = 1..k+1.
inline std::vector<std::pair<int, Count>> decompose_by_min(int k, int l) {
  if (l < 2) throw DomainError("decompose_by_min: need l >= 2");
  if (k < 0) throw DomainError("decompose_by_min: need k >= 0");
  std::vector<std::pair<int, Count>> out;
  for (int i = 1; i <= k + 1; ++i) out.emplace_back(i, binom(k + l - 1 - i, l - 2));
  return out;
}

}  // namespace tspread
