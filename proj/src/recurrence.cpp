#include "horadam/recurrence.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "horadam/error.hpp"

namespace horadam {

namespace {

void require_index(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative index " + std::to_string(n), n);
}

}  // namespace

RecurrenceParams::RecurrenceParams(Integer a, Integer b, Integer p, Integer q)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 1) {
    throw Error(ErrorCode::InvalidArgument, "p must satisfy p >= 1 (got " + p_.get_str() + ")");
  }
}

WeightedSelector::WeightedSelector(std::int64_t m, std::vector<Integer> weights,
                                   std::vector<std::int64_t> offsets)
    : m_(m), s_(std::move(weights)), l_(std::move(offsets)) {
  if (m_ < 1) throw Error(ErrorCode::InvalidArgument, "stride m must satisfy m >= 1");
  if (s_.empty() || s_.size() != l_.size()) {
    throw Error(ErrorCode::InvalidArgument, "weights s and offsets l must be non-empty and of equal length");
  }
  if (std::any_of(s_.begin(), s_.end(), [](const Integer& s) { return s < 0; })) {
    throw Error(ErrorCode::InvalidArgument, "weights s_i must be natural numbers");
  }
  if (std::all_of(s_.begin(), s_.end(), [](const Integer& s) { return s == 0; })) {
    throw Error(ErrorCode::InvalidArgument, "weights s must not be the all-zero vector");
  }
  for (std::int64_t l : l_) {
    if (l < 1 - m_) {
      throw Error(ErrorCode::InvalidArgument,
                  "offset l_i = " + std::to_string(l) + " violates l_i >= 1 - m");
    }
  }
}

WeightedSelector WeightedSelector::block(std::int64_t m, std::int64_t t) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "block length t must be >= 0");
  std::vector<Integer> s(static_cast<std::size_t>(t + 1), Integer(1));
  std::vector<std::int64_t> l(static_cast<std::size_t>(t + 1));
  for (std::int64_t i = 0; i <= t; ++i) l[static_cast<std::size_t>(i)] = i;
  return WeightedSelector(m, std::move(s), std::move(l));
}

std::optional<std::int64_t> WeightedSelector::block_length() const {
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (s_[i] != 1 || l_[i] != static_cast<std::int64_t>(i)) return std::nullopt;
  }
  return static_cast<std::int64_t>(s_.size()) - 1;
}

Integer w_iter(const RecurrenceParams& params, std::int64_t n) {
  require_index(n);
  if (n == 0) return params.a();
  Integer prev = params.a();
  Integer cur = params.b();
  for (std::int64_t i = 2; i <= n; ++i) {
    Integer next = params.p() * cur + params.q() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer w_fast(const RecurrenceParams& params, std::int64_t n) {
  require_index(n);
  if (n <= 1) return n == 0 ? params.a() : params.b();
  // Lucas pair of x^2 - p x - q: U_{k+1} = p U_k + q U_{k-1}, V_k = 2 U_{k+1} - p U_k.
  //   doubling  U_{2j} = U_j V_j,  V_{2j} = V_j^2 - 2 (-q)^j
  //   step      U_{j+1} = (p U_j + V_j) / 2,  V_{j+1} = (D U_j + p V_j) / 2
  // With k = n - 1, W_n = b U_k + q a U_{k-1} = ((b p + 2 q a) U_k + b V_k) / 2. Writing
  // k = 2j + r, W_n is a linear form in (U_{2j}, V_{2j}), which factors through one
  // product at the top level: V_j (e_U U_j + e_V V_j) - 2 e_V (-q)^j.
  const Integer& p = params.p();
  const Integer& q = params.q();
  // per-thread buffers; every value is rewritten before use, so calls share nothing
  thread_local Integer d, neg_q, u, v, power, t, e_u, e_v, stepped;
  d = p * p + 4 * q;
  neg_q = -q;
  auto scale = [](mpz_ptr out, mpz_srcptr x, const Integer& c) {
    if (c.fits_slong_p()) {
      mpz_mul_si(out, x, c.get_si());
    } else {
      mpz_mul(out, x, c.get_mpz_t());
    }
  };

  const auto k = static_cast<std::uint64_t>(n - 1);
  const std::uint64_t j = k >> 1;
  u = 0;
  v = 2;
  power = 1;
  mpz_ptr U = u.get_mpz_t(), V = v.get_mpz_t(), Qj = power.get_mpz_t(), T = t.get_mpz_t();
  for (int bit = j == 0 ? -1 : 63 - std::countl_zero(j); bit >= 0; --bit) {
    mpz_mul(U, U, V);
    mpz_mul(V, V, V);
    mpz_submul_ui(V, Qj, 2);
    mpz_mul(Qj, Qj, Qj);
    if ((j >> bit) & 1U) {
      scale(T, U, d);
      scale(U, U, p);
      mpz_add(U, U, V);
      scale(V, V, p);
      mpz_add(V, V, T);
      mpz_tdiv_q_2exp(U, U, 1);
      mpz_tdiv_q_2exp(V, V, 1);
      scale(Qj, Qj, neg_q);
    }
  }

  e_u = params.b() * p + 2 * q * params.a();
  e_v = params.b();
  unsigned shift = 1;
  if (k & 1U) {
    // fold the odd step into the linear form
    stepped = e_u * p + e_v * d;
    e_v = e_u + e_v * p;
    mpz_swap(e_u.get_mpz_t(), stepped.get_mpz_t());
    shift = 2;
  }
  Integer result;
  mpz_ptr R = result.get_mpz_t();
  scale(R, U, e_u);
  scale(T, V, e_v);
  mpz_add(R, R, T);
  mpz_mul(R, R, V);
  scale(T, Qj, e_v);
  mpz_submul_ui(R, T, 2);
  mpz_tdiv_q_2exp(R, R, shift);
  return result;
}

std::vector<Integer> w_range(const RecurrenceParams& params, std::int64_t lo, std::int64_t hi) {
  require_index(lo);
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "w_range requires lo <= hi");
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  Integer prev = params.a();
  Integer cur = params.b();
  if (lo == 0) out.push_back(prev);
  for (std::int64_t i = 1; i <= hi; ++i) {
    if (i >= 2) {
      Integer next = params.p() * cur + params.q() * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (i >= lo) out.push_back(cur);
  }
  return out;
}

HoradamSequence::HoradamSequence(RecurrenceParams params)
    : params_(std::move(params)), terms_{params_.a(), params_.b()} {}

HoradamSequence::HoradamSequence(const HoradamSequence& other) : params_(other.params_) {
  std::lock_guard lock(other.mutex_);
  terms_ = other.terms_;
}

HoradamSequence& HoradamSequence::operator=(const HoradamSequence& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  params_ = other.params_;
  terms_ = other.terms_;
  return *this;
}

void HoradamSequence::extend_locked(std::int64_t n) const {
  const auto want = static_cast<std::size_t>(n) + 1;
  if (terms_.size() >= want) return;
  terms_.reserve(std::max(want, 2 * terms_.size()));
  while (terms_.size() < want) {
    const std::size_t i = terms_.size();
    terms_.push_back(params_.p() * terms_[i - 1] + params_.q() * terms_[i - 2]);
  }
}

Integer HoradamSequence::at(std::int64_t n) const {
  require_index(n);
  std::lock_guard lock(mutex_);
  extend_locked(n);
  return terms_[static_cast<std::size_t>(n)];
}

Integer HoradamSequence::weighted_denominator(const WeightedSelector& sel, std::int64_t k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "summation index k must be >= 1", k);
  const auto weights = sel.weights();
  const auto offsets = sel.offsets();
  std::int64_t top = 0;
  for (std::int64_t l : offsets) top = std::max(top, sel.stride() * k + l);

  std::lock_guard lock(mutex_);
  extend_locked(top);
  Integer d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    d += weights[i] * terms_[static_cast<std::size_t>(sel.stride() * k + offsets[i])];
  }
  return d;
}

Integer weighted_denominator(const RecurrenceParams& params, const WeightedSelector& sel, std::int64_t k) {
  return HoradamSequence(params).weighted_denominator(sel, k);
}

}  // namespace horadam
