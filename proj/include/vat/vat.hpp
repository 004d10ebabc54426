#pragma once

// Umbrella header for the variance-aware test set (VAT) toolkit.

#include <string_view>

#include "vat/analysis.hpp"
#include "vat/corpus.hpp"
#include "vat/error.hpp"
#include "vat/filter.hpp"
#include "vat/metaeval.hpp"
#include "vat/metrics.hpp"

namespace vat {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace vat
