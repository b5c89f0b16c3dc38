#include "casimir/report.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string join(std::span<const Label> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

Label parse_label(std::string_view token) {
  Label value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("'" + std::string(token) + "' is not an integer");
  }
  return value;
}

std::vector<Label> parse_labels(std::string_view text) {
  std::vector<Label> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_label(token));
  return out;
}

Json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from(const Json& json, const char* key) {
  if (!json.contains(key) || !json.at(key).is_string()) {
    throw InvalidArgument(std::string("missing rational field '") + key + "'");
  }
  return Rational::parse(json.at(key).get<std::string>());
}

}  // namespace

ReportRecord make_record(const StableRep& rep, std::uint64_t multiplicity,
                         std::optional<BigInt> dimension) {
  ReportRecord record;
  record.stable_rep = rep;
  record.multiplicity = multiplicity;
  record.dimension = std::move(dimension);
  record.poly = casimir_stable(rep);
  record.balanced = is_balanced(rep);
  record.area_head = area_head(rep);
  record.area_tail = area_tail(rep);
  if (is_linear(record.poly)) record.universal = universal_form(record.poly);
  return record;
}

Json to_json(const ReportRecord& record) {
  Json out;
  out["k"] = record.stable_rep.k();
  out["head"] = std::vector<Label>(record.stable_rep.head().begin(), record.stable_rep.head().end());
  out["tail"] = std::vector<Label>(record.stable_rep.tail().begin(), record.stable_rep.tail().end());
  out["mult"] = record.multiplicity;
  if (record.dimension) {
    out["dim"] = to_string(*record.dimension);
  } else {
    out["dim"] = nullptr;
  }
  out["poly"] = {{"a1", rational_json(record.poly.a1)},
                 {"a0", rational_json(record.poly.a0)},
                 {"am1", rational_json(record.poly.am1)}};
  out["balanced"] = record.balanced;
  out["areas"] = {record.area_head, record.area_tail};
  if (record.universal) {
    out["universal"] = {{"x", rational_json(record.universal->x)},
                        {"y", rational_json(record.universal->y)},
                        {"z", rational_json(record.universal->z)}};
  } else {
    out["universal"] = nullptr;
  }
  return out;
}

ReportRecord record_from_json(const Json& json) {
  try {
    ReportRecord record;
    const auto head = json.at("head").get<std::vector<Label>>();
    const auto tail = json.at("tail").get<std::vector<Label>>();
    if (json.at("k").get<int>() != static_cast<int>(head.size())) {
      throw InvalidArgument("field 'k' disagrees with the head length");
    }
    record.stable_rep = StableRep(head, tail);
    record.multiplicity = json.at("mult").get<std::uint64_t>();
    if (const auto& dim = json.at("dim"); !dim.is_null()) {
      record.dimension = BigInt(dim.get<std::string>(), 10);
    }
    const auto& poly = json.at("poly");
    record.poly = {rational_from(poly, "a1"), rational_from(poly, "a0"), rational_from(poly, "am1")};
    record.balanced = json.at("balanced").get<bool>();
    const auto areas = json.at("areas").get<std::vector<Label>>();
    if (areas.size() != 2) throw InvalidArgument("field 'areas' must hold two integers");
    record.area_head = areas[0];
    record.area_tail = areas[1];
    const auto& universal = json.at("universal");
    if (!universal.is_null()) {
      record.universal = UniversalCoeffs{rational_from(universal, "x"),
                                         rational_from(universal, "y"),
                                         rational_from(universal, "z")};
    }
    if (record.balanced != is_linear(record.poly)) {
      throw InvalidArgument("'balanced' disagrees with the 1/N coefficient");
    }
    if (record.universal.has_value() != record.balanced) {
      throw InvalidArgument("'universal' must be present exactly for balanced records");
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // BigInt construction from a non-numeric string.
    throw InvalidArgument(std::string("malformed report record: ") + e.what());
  }
}

std::string csv_header() { return "k,head,tail,mult,dim,a1,a0,am1,balanced,area_head,area_tail,x,y,z"; }

std::string to_csv(const ReportRecord& r) {
  std::ostringstream out;
  out << r.stable_rep.k() << ',' << join(r.stable_rep.head()) << ',' << join(r.stable_rep.tail())
      << ',' << r.multiplicity << ',' << (r.dimension ? to_string(*r.dimension) : "") << ',' << r.poly.a1 << ','
      << r.poly.a0 << ',' << r.poly.am1 << ',' << (r.balanced ? "true" : "false") << ','
      << r.area_head << ',' << r.area_tail << ',';
  if (r.universal) out << r.universal->x << ',' << r.universal->y << ',' << r.universal->z;
  else out << ",,";
  return out.str();
}

std::string to_text(const ReportRecord& r) {
  std::ostringstream out;
  out << '[' << r.stable_rep.to_string() << "] mult=" << r.multiplicity;
  if (r.dimension) out << " dim=" << to_string(*r.dimension);
  out << " C=" << to_string(r.poly)
      << " balanced=" << (r.balanced ? "true" : "false") << " areas=" << r.area_head << '/'
      << r.area_tail;
  if (r.universal) {
    out << " universal=(x=" << r.universal->x << ", y=" << r.universal->y
        << ", z=" << r.universal->z << ')';
  }
  return out.str();
}

std::optional<StableRep> parse_batch_line(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  if (line.find_first_not_of(" \t\r") == std::string_view::npos) return std::nullopt;

  const auto bar = line.find('|');
  if (bar == std::string_view::npos) throw InvalidArgument("expected 'k | head / tail'");
  const auto slash = line.find('/', bar);
  if (slash == std::string_view::npos) throw InvalidArgument("missing '/' between head and tail");

  const auto k_tokens = parse_labels(line.substr(0, bar));
  if (k_tokens.size() != 1) throw InvalidArgument("expected a single k before '|'");
  const Label k = k_tokens.front();
  if (k < 1) throw InvalidArgument("k must be >= 1");
  auto head = parse_labels(line.substr(bar + 1, slash - bar - 1));
  auto tail = parse_labels(line.substr(slash + 1));
  if (head.size() != static_cast<std::size_t>(k) || tail.size() != static_cast<std::size_t>(k)) {
    throw InvalidArgument("k=" + std::to_string(k) + " but head has " +
                          std::to_string(head.size()) + " and tail has " +
                          std::to_string(tail.size()) + " labels");
  }
  return StableRep(std::move(head), std::move(tail));
}

}  // namespace casimir
