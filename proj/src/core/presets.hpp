#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xyq {

/// Valid figure preset ids ("1a" ... "17b").
std::vector<std::string> figure_ids();

/// Emits the CSV for one bundled figure preset; n_spins <= 0 picks the
/// default of 1000.
void reproduce(const std::string& figure_id, int n_spins, std::ostream& out);

}  // namespace xyq
