#pragma once

#include <optional>
#include <string>

#include "bipramsey/bounds.hpp"
#include "bipramsey/double_star.hpp"
#include "bipramsey/searcher.hpp"
#include "bipramsey/turan.hpp"

// Line-oriented "key value" records, plus a JSON form of the same fields.

namespace bipramsey {

/// "none\n" when there is no witness.
std::string format_witness(const std::optional<Witness>& w);
std::string format_witness_json(const std::optional<Witness>& w);

std::string format_turan_report(const TuranReport& r);
std::string format_turan_report_json(const TuranReport& r);

std::string format_bounds(const BoundsReport& r);
std::string format_bounds_json(const BoundsReport& r);

/// Verdict and stats only; the certificate is written separately as bsr.
std::string format_arrows(const ArrowsResult& r);
std::string format_arrows_json(const ArrowsResult& r);

std::string format_ramsey(const RamseyResult& r);
std::string format_ramsey_json(const RamseyResult& r);

}  // namespace bipramsey
