#include "sequence.hpp"

#include "cucalc/error.hpp"

namespace cucalc::detail {

namespace {

void need_two(std::size_t n, LawKind law) {
  if (n < 2) {
    throw PreconditionError(std::string(law_name(law)) + " law needs at least two listed values");
  }
}

QInf pow_q(const QInf& r, std::size_t k) {
  QInf out(1);
  for (std::size_t i = 0; i < k; ++i) out = out * r;
  return out;
}

// Ratio of successive gaps; 1/2 when only one gap is listed.
QInf geometric_ratio(const std::vector<QInf>& hist) {
  const std::size_t n = hist.size();
  const QInf d1 = hist[n - 1] - hist[n - 2];
  QInf r(1, 2);
  if (n >= 3) {
    const QInf d0 = hist[n - 2] - hist[n - 3];
    if (!d0.is_zero()) r = d1 / d0;
  }
  if (r.is_zero() || !(r < QInf(1))) {
    throw PreconditionError("geometric law needs shrinking gaps (ratio " + r.str() + ")");
  }
  return r;
}

}  // namespace

QInf q_term(const std::vector<QInf>& hist, LawKind law, const std::optional<QInf>& limit,
            std::size_t k) {
  if (hist.empty()) throw PreconditionError("empty chain");
  const QInf& last = hist.back();
  if (k == 0 || last.is_inf()) return last;
  switch (law) {
    case LawKind::Stabilize:
      return last;
    case LawKind::Arithmetic: {
      need_two(hist.size(), law);
      const QInf d = last - hist[hist.size() - 2];
      return last + QInf(static_cast<std::int64_t>(k)) * d;
    }
    case LawKind::Geometric: {
      need_two(hist.size(), law);
      const QInf d = last - hist[hist.size() - 2];
      if (d.is_zero()) return last;
      const QInf r = geometric_ratio(hist);
      // last + d (r + r^2 + ... + r^k)
      const QInf partial = r * (QInf(1) - pow_q(r, k)) / (QInf(1) - r);
      return last + d * partial;
    }
    case LawKind::Explicit: {
      if (!limit) throw PreconditionError("explicit law without a stated limit");
      if (*limit < last) throw PreconditionError("stated limit below the chain");
      if (*limit == last) return last;
      if (limit->is_inf()) return last + QInf(static_cast<std::int64_t>(k));
      return *limit - (*limit - last) / pow_q(QInf(2), k);
    }
  }
  return last;
}

QInf q_limit(const std::vector<QInf>& hist, LawKind law, const std::optional<QInf>& limit) {
  if (hist.empty()) throw PreconditionError("empty chain");
  const QInf& last = hist.back();
  if (last.is_inf()) return last;
  switch (law) {
    case LawKind::Stabilize:
      return last;
    case LawKind::Arithmetic: {
      need_two(hist.size(), law);
      const QInf d = last - hist[hist.size() - 2];
      return d.is_zero() ? last : QInf::infinity();
    }
    case LawKind::Geometric: {
      need_two(hist.size(), law);
      const QInf d = last - hist[hist.size() - 2];
      if (d.is_zero()) return last;
      const QInf r = geometric_ratio(hist);
      return last + d * r / (QInf(1) - r);
    }
    case LawKind::Explicit:
      if (!limit) throw PreconditionError("explicit law without a stated limit");
      if (*limit < last) throw PreconditionError("stated limit below the chain");
      return *limit;
  }
  return last;
}

ExtNat n_term(const std::vector<ExtNat>& hist, LawKind law, const std::optional<ExtNat>& limit,
              std::size_t k) {
  if (hist.empty()) throw PreconditionError("empty chain");
  const ExtNat& last = hist.back();
  if (k == 0 || last.is_inf()) return last;
  switch (law) {
    case LawKind::Stabilize:
      return last;
    case LawKind::Arithmetic: {
      need_two(hist.size(), law);
      const ExtNat& prev = hist[hist.size() - 2];
      if (prev > last) throw PreconditionError("decreasing coordinate");
      const ExtNat d(last.value() - prev.value());
      return last + ExtNat(k) * d;
    }
    case LawKind::Geometric: {
      need_two(hist.size(), law);
      if (hist[hist.size() - 2] == last) return last;
      throw PreconditionError("geometric law cannot approach a natural number from below");
    }
    case LawKind::Explicit: {
      if (!limit) throw PreconditionError("explicit law without a stated limit");
      if (*limit == last) return last;
      if (limit->is_inf()) return last + ExtNat(k);
      throw PreconditionError("a finite natural limit must already be attained");
    }
  }
  return last;
}

ExtNat n_limit(const std::vector<ExtNat>& hist, LawKind law, const std::optional<ExtNat>& limit) {
  if (hist.empty()) throw PreconditionError("empty chain");
  const ExtNat& last = hist.back();
  if (last.is_inf()) return last;
  switch (law) {
    case LawKind::Stabilize:
      return last;
    case LawKind::Arithmetic: {
      need_two(hist.size(), law);
      const ExtNat& prev = hist[hist.size() - 2];
      if (prev > last) throw PreconditionError("decreasing coordinate");
      return prev == last ? last : ExtNat::infinity();
    }
    case LawKind::Geometric:
      need_two(hist.size(), law);
      if (hist[hist.size() - 2] == last) return last;
      throw PreconditionError("geometric law cannot approach a natural number from below");
    case LawKind::Explicit:
      if (!limit) throw PreconditionError("explicit law without a stated limit");
      if (*limit == last || limit->is_inf()) return *limit;
      throw PreconditionError("a finite natural limit must already be attained");
  }
  return last;
}

}  // namespace cucalc::detail
