#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "casimir/casimir_poly.hpp"
#include "casimir/rational.hpp"
#include "casimir/universal.hpp"
#include "casimir/young.hpp"

namespace casimir {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

/// One constituent (or one standalone stable rep) with every derived quantity.
struct ReportRecord {
  StableRep stable_rep = StableRep::trivial();
  std::uint64_t multiplicity = 1;
  /// Absent for a bare stable rep, which has no single dimension.
  std::optional<BigInt> dimension;
  CasimirPoly poly;
  bool balanced = true;
  Label area_head = 0;
  Label area_tail = 0;
  std::optional<UniversalCoeffs> universal;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_record(const StableRep& rep, std::uint64_t multiplicity,
                         std::optional<BigInt> dimension);

Json to_json(const ReportRecord& record);
/// Throws InvalidArgument on schema violations.
ReportRecord record_from_json(const Json& json);

std::string csv_header();
std::string to_csv(const ReportRecord& record);
std::string to_text(const ReportRecord& record);

/// Parses "k | head... / tail...". Blank and '#'-comment lines yield nullopt;
/// malformed lines throw InvalidArgument.
std::optional<StableRep> parse_batch_line(std::string_view line);

}  // namespace casimir
