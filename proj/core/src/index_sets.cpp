// SPDX-License-Identifier: MIT
#include "rotset/index_sets.hpp"

#include <stdexcept>

#include "rotset/detail/intops.hpp"

namespace rotset {

namespace {

void require_window(const RhoParam& rho, std::int64_t M, const char* where) {
  if (M > rho.max_safe_index())
    throw DomainError(std::string(where) +
                      ": requested range exceeds the certified window (" +
                      std::to_string(rho.max_safe_index()) + ")");
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("block cross-check failed: ") + what);
}

}  // namespace

std::int64_t n_max_high(const RhoParam& rho, std::int64_t k) {
  if (!rho.high_regime()) throw DomainError("n_max_high requires rho > 1/2");
  if (k < 0) throw DomainError("block number must be >= 0");
  const Int &p = rho.num(), &q = rho.den();
  return to_i64(floor_div(Int(k + 1) * q, q - p)) - 1;
}

std::int64_t n_prime_low(const RhoParam& rho, std::int64_t k) {
  if (rho.high_regime()) throw DomainError("n_prime_low requires rho < 1/2");
  if (k < 1) throw DomainError("singleton number must be >= 1");
  return to_i64(floor_div(Int(k) * rho.den(), rho.num()));
}

std::int64_t m_floor_low(const RhoParam& rho, std::int64_t j) {
  if (rho.high_regime()) throw DomainError("m_floor_low requires rho < 1/2");
  if (j < 0) throw DomainError("group number must be >= 0");
  if (j == 0) return 0;
  const Int &p = rho.num(), &q = rho.den();
  Int t = floor_div(q, p);
  return to_i64(floor_div(Int(j) * p, q - t * p));
}

BlockDecompositionHigh blocks_high(const RhoParam& rho, std::int64_t k_max) {
  if (!rho.high_regime()) throw DomainError("blocks_high requires rho > 1/2");
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  BlockDecompositionHigh out{rho, {}, {}, 0};
  const Int &p = rho.num(), &q = rho.den();
  const Rat gap = rho.one_minus();

  std::int64_t last_hi = n_max_high(rho, k_max);
  require_window(rho, last_hi, "blocks_high");

  out.blocks.reserve(static_cast<size_t>(k_max) + 1);
  out.n_max.reserve(static_cast<size_t>(k_max) + 1);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    std::int64_t lo = to_i64(floor_div(Int(k) * q, q - p)) + 1;
    std::int64_t hi = n_max_high(rho, k);
    check(lo <= hi, "high-regime block is empty");

    // Exact endpoint identities: alpha_m = (m - k) - m*rho on the block.
    check(alpha(rho, lo) == Rat(lo - k) - Rat(lo) * rho.value(),
          "alpha closed form at block start");
    check(alpha(rho, hi) == Rat(hi - k) - Rat(hi) * rho.value(),
          "alpha closed form at block end");
    check(alpha(rho, hi) - alpha(rho, lo) == Rat(hi - lo) * gap,
          "alpha step across block");
    // Membership flips exactly at both ends.
    check(member_index_set(rho, lo) && member_index_set(rho, hi),
          "block interior membership");
    if (lo - 1 >= 1) check(!member_index_set(rho, lo - 1), "pre-block gap");
    if (hi + 1 <= rho.max_safe_index())
      check(!member_index_set(rho, hi + 1), "post-block gap");

    out.blocks.push_back({k, lo, hi});
    out.n_max.push_back(hi);
  }
  out.coverage = last_hi;
  return out;
}

BlockDecompositionLow blocks_low(const RhoParam& rho, std::int64_t j_max) {
  if (rho.high_regime()) throw DomainError("blocks_low requires rho < 1/2");
  if (j_max < 1) throw DomainError("j_max must be >= 1");
  BlockDecompositionLow out{rho, {}, {}, {}, {}, 0};
  const std::int64_t t = rho.floor_inv();
  check(t >= 2, "low regime must have floor(1/rho) >= 2");
  out.s = Rat(1) - Rat(t) * rho.value();
  check(out.s > 0 && out.s < rho.value(), "s must lie in (0, rho)");

  out.m_seq.reserve(static_cast<size_t>(j_max));
  for (std::int64_t j = 1; j <= j_max; ++j)
    out.m_seq.push_back(m_floor_low(rho, j));

  const std::int64_t k_top = out.m_seq.back();
  const std::int64_t cover = n_prime_low(rho, k_top);
  require_window(rho, cover, "blocks_low");

  out.n_prime.reserve(static_cast<size_t>(k_top));
  for (std::int64_t k = 1; k <= k_top; ++k)
    out.n_prime.push_back(n_prime_low(rho, k));

  std::int64_t prev = 0;
  for (std::int64_t j = 1; j <= j_max; ++j) {
    std::int64_t mj = out.m_seq[static_cast<size_t>(j - 1)];
    check(mj > prev, "group boundaries must strictly increase");
    out.y_blocks.push_back({j, prev + 1, mj});

    // Affine form of the singletons and their alpha values on the group,
    // checked exactly at both ends.
    for (std::int64_t k : {prev + 1, mj}) {
      std::int64_t np = out.n_prime[static_cast<size_t>(k - 1)];
      check(np == k * t + j - 1, "singleton closed form on group");
      check(alpha(rho, np) == Rat(k) * out.s - Rat(j - 1) * rho.value(),
            "alpha closed form on group");
      check(member_index_set(rho, np), "singleton membership");
      if (np - 1 >= 1) check(!member_index_set(rho, np - 1), "pre-singleton gap");
      if (np + 1 <= rho.max_safe_index())
        check(!member_index_set(rho, np + 1), "post-singleton gap");
    }
    prev = mj;
  }
  out.coverage = cover;
  return out;
}

std::int64_t k_max_for_coverage(const RhoParam& rho, std::int64_t M) {
  if (!rho.high_regime()) throw DomainError("k_max_for_coverage requires rho > 1/2");
  if (M < 1) throw DomainError("coverage target must be >= 1");
  Rat target = Rat(M + 1) * rho.one_minus() - 1;
  std::int64_t k = to_i64(ceil_rat(target));
  if (k < 0) k = 0;
  while (n_max_high(rho, k) < M) ++k;
  while (k > 0 && n_max_high(rho, k - 1) >= M) --k;
  return k;
}

std::int64_t j_max_for_coverage(const RhoParam& rho, std::int64_t M) {
  if (rho.high_regime()) throw DomainError("j_max_for_coverage requires rho < 1/2");
  if (M < 1) throw DomainError("coverage target must be >= 1");
  auto cover = [&](std::int64_t j) {
    return n_prime_low(rho, m_floor_low(rho, j));
  };
  std::int64_t hi = 1;
  while (cover(hi) < M) hi *= 2;
  std::int64_t lo = hi == 1 ? 1 : hi / 2;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (cover(mid) >= M)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::vector<std::int64_t> scan_index_set(const RhoParam& rho, std::int64_t M) {
  if (M < 1) throw DomainError("scan range must be >= 1");
  require_window(rho, M, "scan_index_set");
  std::vector<std::int64_t> out;
  const Int &p = rho.num(), &q = rho.den();
  if (fits_i64(p) && fits_i64(q)) {
    const std::int64_t pi = p.get_si(), qi = q.get_si(), cut = qi - pi;
    std::int64_t r = 0;
    for (std::int64_t m = 1; m <= M; ++m) {
      r += pi;
      if (r >= qi) r -= qi;
      if (r > cut) out.push_back(m);
    }
  } else {
    Int r = 0, cut = q - p;
    for (std::int64_t m = 1; m <= M; ++m) {
      r += p;
      if (r >= q) r -= q;
      if (r > cut) out.push_back(m);
    }
  }
  return out;
}

std::vector<std::int64_t> blocks_index_set(const RhoParam& rho, std::int64_t M) {
  if (M < 1) throw DomainError("range must be >= 1");
  require_window(rho, M, "blocks_index_set");
  std::vector<std::int64_t> out;
  if (rho.high_regime()) {
    const Int &p = rho.num(), &q = rho.den();
    for (std::int64_t k = 0;; ++k) {
      std::int64_t lo = to_i64(floor_div(Int(k) * q, q - p)) + 1;
      if (lo > M) break;
      std::int64_t hi = std::min(n_max_high(rho, k), M);
      for (std::int64_t m = lo; m <= hi; ++m) out.push_back(m);
      if (hi == M) break;
    }
  } else {
    for (std::int64_t k = 1;; ++k) {
      std::int64_t np = n_prime_low(rho, k);
      if (np > M) break;
      out.push_back(np);
    }
  }
  return out;
}

}  // namespace rotset
