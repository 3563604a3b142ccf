#pragma once

#include "ktoric/grobner.hpp"
#include "ktoric/ktheory.hpp"
#include "ktoric/picard.hpp"
#include "ktoric/cli/stack_io.hpp"

#include <ostream>

namespace ktoric::cli {

Json group_to_json(const FgAbelianGroup& g);
Json invariants_to_json(const AbGroupInvariants& inv);
Json connectedness_to_json(const ConnectednessReport& r);
Json pic_to_json(const PicResult& r);
Json strings_to_json(const std::vector<std::string>& xs);

/// Human-readable form of a report; the timing block is left out.
void print_report(const Json& report, std::ostream& out);

/// Copy of the report without its timing block.
Json strip_timing(Json report);

} // namespace ktoric::cli
