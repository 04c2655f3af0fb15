#pragma once

// Coordinate-wise continuation of a listed sequence under a limit law.
// `hist` holds the listed values of one coordinate, oldest first.

#include <optional>
#include <vector>

#include "cucalc/carriers.hpp"
#include "cucalc/scalar.hpp"

namespace cucalc::detail {

QInf q_term(const std::vector<QInf>& hist, LawKind law, const std::optional<QInf>& limit,
            std::size_t k);
QInf q_limit(const std::vector<QInf>& hist, LawKind law, const std::optional<QInf>& limit);

ExtNat n_term(const std::vector<ExtNat>& hist, LawKind law, const std::optional<ExtNat>& limit,
              std::size_t k);
ExtNat n_limit(const std::vector<ExtNat>& hist, LawKind law, const std::optional<ExtNat>& limit);

}  // namespace cucalc::detail
