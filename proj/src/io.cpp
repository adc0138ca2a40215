#include "symbetti/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "symbetti/errors.hpp"

namespace symbetti {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, "ideal file: " + what);
}

}  // namespace

ParsedIdeal parse_ideal_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("top level must be an object");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    parse_error("missing \"generators\" array");

  std::vector<Partition> input;
  for (const auto& g : doc["generators"]) {
    if (!g.is_array()) parse_error("each generator must be an integer list");
    std::vector<int> parts;
    for (const auto& p : g) {
      if (!p.is_number_integer()) parse_error("partition parts must be integers");
      parts.push_back(p.get<int>());
    }
    input.emplace_back(std::move(parts));
  }

  FieldSpec field;
  if (doc.contains("characteristic")) {
    const auto& c = doc["characteristic"];
    if (!c.is_number_integer()) parse_error("characteristic must be an integer");
    const auto value = c.get<std::int64_t>();
    if (value < 0 || value > std::numeric_limits<std::uint32_t>::max())
      throw Error(ErrorCode::NotPrime,
                  "characteristic must be 0 or a prime, got " + std::to_string(value));
    field = FieldSpec(static_cast<std::uint32_t>(value));
  }

  ParsedIdeal out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_error("name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  out.ideal = SymmetricIdeal(input, field);
  const auto& kept = out.ideal.generators();
  std::vector<Partition> seen;
  for (const auto& p : input) {
    const bool is_kept = std::find(kept.begin(), kept.end(), p) != kept.end();
    const bool repeat = std::find(seen.begin(), seen.end(), p) != seen.end();
    if (!is_kept)
      out.warnings.push_back(p.to_string() + " redundant");
    else if (repeat)
      out.warnings.push_back(p.to_string() + " duplicate");
    seen.push_back(p);
  }
  return out;
}

ParsedIdeal parse_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal_text(buffer.str());
}

json to_json(const CompactDegree& degree) {
  return {{"prefix", degree.prefix},
          {"value", degree.repeated_value},
          {"repeat", degree.repeat_count},
          {"zeros", degree.zero_count}};
}

CompactDegree compact_from_json(const json& j) {
  return CompactDegree::make(j.at("prefix").get<std::vector<int>>(),
                             j.at("value").get<int>(),
                             j.at("repeat").get<std::int64_t>(),
                             j.at("zeros").get<std::int64_t>());
}

json to_json(const BettiSet& betti, bool with_table) {
  json records = json::array();
  for (const auto& r : betti.records())
    records.push_back({{"i", r.homological_degree},
                       {"degree", r.degree.exponents()},
                       {"rank", r.rank},
                       {"compact", to_json(CompactDegree::from(r.degree))}});
  json out = {{"n", betti.n()}, {"records", std::move(records)}};
  if (with_table) {
    json table = json::array();
    for (const auto& [pos, beta] : graded_table(betti))
      table.push_back({{"i", pos.first}, {"j", pos.second}, {"beta", beta}});
    out["table"] = std::move(table);
  }
  return out;
}

BettiSet betti_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<BettiRecord> records;
    for (const auto& r : j.at("records")) {
      Multidegree degree(r.at("degree").get<std::vector<int>>());
      if (static_cast<int>(degree.size()) != n)
        parse_error("record degree length differs from n");
      records.push_back({r.at("i").get<int>(), std::move(degree),
                         r.at("rank").get<std::uint64_t>()});
    }
    return BettiSet(n, std::move(records));
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

json to_json(const SegmentSet& segments) {
  json base = json::array(), d = json::array(), weighted = json::array();
  for (const auto& [i, j] : segments.base) base.push_back({i, j});
  for (const auto& s : segments.D) d.push_back({s.i, s.j, s.c});
  for (const auto& [s, w] : segments.weighted) weighted.push_back({s.i, s.j, s.c, w});
  return {{"m", segments.m}, {"base", base}, {"D", d}, {"weighted", weighted}};
}

SegmentSet segments_from_json(const json& j) {
  try {
    SegmentSet out;
    out.m = j.at("m").get<int>();
    for (const auto& p : j.at("base"))
      out.base.emplace(p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>());
    for (const auto& t : j.at("D"))
      out.D.insert({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    if (j.contains("weighted"))
      for (const auto& t : j.at("weighted"))
        out.weighted.emplace_back(
            Segment{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()},
            t.at(3).get<std::uint64_t>());
    return out;
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

json to_json(const AsymptoticProfile& p) {
  return {{"m", p.m},
          {"pd_at_m", p.pd_at_m},
          {"pd_offset", p.pd_offset},
          {"reg_slope", p.reg_slope},
          {"reg_intercept", p.reg_intercept},
          {"reg_threshold", p.reg_threshold},
          {"cohen_macaulay", p.cohen_macaulay},
          {"w", p.w},
          {"r", p.r},
          {"summary", describe(p)}};
}

std::string render_table(const GradedTable& table) {
  if (table.empty()) return "(zero ideal)\n";
  int max_i = 0, min_j = table.begin()->first.second, max_j = min_j;
  std::map<int, std::uint64_t> totals;
  for (const auto& [pos, beta] : table) {
    max_i = std::max(max_i, pos.first);
    min_j = std::min(min_j, pos.second);
    max_j = std::max(max_j, pos.second);
    totals[pos.first] += beta;
  }
  std::size_t width = std::to_string(max_i).size();
  for (const auto& [i, t] : totals) width = std::max(width, std::to_string(t).size());
  const std::size_t label = std::max<std::size_t>(6, std::to_string(max_j).size() + 1);

  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << ' ' << std::string(width - s.size(), ' ') << s;
  };
  auto row_label = [&](const std::string& s) {
    out << std::string(label - s.size(), ' ') << s;
  };
  row_label("");
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(i));
  out << '\n';
  row_label("total:");
  for (int i = 0; i <= max_i; ++i)
    cell(totals.contains(i) ? std::to_string(totals[i]) : "0");
  out << '\n';
  for (int j = min_j; j <= max_j; ++j) {
    row_label(std::to_string(j) + ":");
    for (int i = 0; i <= max_i; ++i) {
      auto it = table.find({i, j});
      cell(it == table.end() ? "." : std::to_string(it->second));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_segments(const SegmentSet& segments) {
  std::ostringstream out;
  out << "D = {";
  bool first = true;
  for (const auto& s : segments.D) {
    out << (first ? "" : ",") << '(' << s.i << ',' << s.j << ',' << s.c << ')';
    first = false;
  }
  out << "}, m = " << segments.m << '\n';
  out << "base = {";
  first = true;
  for (const auto& [i, j] : segments.base) {
    out << (first ? "" : ",") << '(' << i << ',' << j << ')';
    first = false;
  }
  out << "}\n";
  out << "positions(n) = base";
  const std::string length = segments.m == 0 ? "n" : "n−" + std::to_string(segments.m);
  for (const auto& s : segments.D)
    out << " ∪ 𝓛((" << s.i << ',' << s.j << ")," << s.c << ',' << length << ')';
  out << "  for n ≥ " << segments.m << '\n';
  return out.str();
}

Extrapolation extrapolate(const Stabilization& data, std::int64_t n,
                          const BettiOptions& options) {
  Extrapolation out;
  out.n = n;
  out.m = data.m;
  out.count = compose_B_size(data, n);
  for (int t = 1; t < data.m; ++t)
    for (const auto& r : data.free_at(t)) {
      auto c = CompactDegree::from(r.degree);
      c.zero_count += n - t;
      out.fixed.push_back({r.homological_degree, std::move(c), r.rank});
    }
  out.families = data.free_at(data.m);

  if (n > data.m) {
    std::vector<BettiSet> direct;
    for (int level = data.m + 1; level <= data.m + 2; ++level) {
      if (level > vertex_cap()) {
        out.warnings.push_back("rank check at n=" + std::to_string(level) +
                               " skipped (vertex cap)");
        continue;
      }
      direct.push_back(betti_set(data.ideal, level, options));
    }
    const auto report = verify_rank_carrying(data, direct);
    if (!report.passed)
      throw std::logic_error("extrapolated positions disagree with direct computation: " +
                             report.counterexamples.front());
    if (!report.ranks_preserved) {
      out.ranks_verified = false;
      out.warnings.push_back("ranks not preserved under the shift (" +
                             report.rank_mismatches.front() +
                             "); reporting positions only");
    }
  }
  return out;
}

namespace {

json compact_record_json(const CompactRecord& r, bool with_rank, bool explicit_degree) {
  json j = {{"i", r.homological_degree}, {"compact", to_json(r.degree)}};
  if (explicit_degree) j["degree"] = r.degree.expand().exponents();
  if (with_rank) j["rank"] = r.rank;
  return j;
}

}  // namespace

json to_json(const Extrapolation& e) {
  const bool explicit_degree = e.n <= kExtrapolationListLimit;
  json fixed = json::array(), families = json::array();
  for (const auto& r : e.fixed)
    fixed.push_back(compact_record_json(r, e.ranks_verified, explicit_degree));
  for (const auto& r : e.families) {
    json f = {{"i0", r.homological_degree},
              {"source_degree", r.degree.exponents()},
              {"k_min", e.m},
              {"k_max", e.n}};
    if (e.ranks_verified) f["rank"] = r.rank;
    families.push_back(std::move(f));
  }
  json out = {{"n", e.n},         {"m", e.m},
              {"count", e.count}, {"ranks_verified", e.ranks_verified},
              {"fixed", fixed},   {"families", families},
              {"warnings", e.warnings}};
  if (explicit_degree) {
    json records = json::array();
    std::vector<CompactRecord> all = e.fixed;
    for (std::int64_t k = e.m; k <= e.n; ++k)
      for (const auto& r : e.families) {
        std::vector<int> prefix = r.degree.exponents();
        prefix.pop_back();
        all.push_back({r.homological_degree + (k - e.m),
                       CompactDegree::make(std::move(prefix), r.degree.exponents().back(),
                                           1 + (k - e.m), e.n - k),
                       r.rank});
      }
    std::sort(all.begin(), all.end());
    for (const auto& r : all)
      records.push_back(compact_record_json(r, e.ranks_verified, true));
    out["records"] = std::move(records);
  }
  return out;
}

std::string render_extrapolation(const Extrapolation& e) {
  std::ostringstream out;
  out << "n = " << e.n << ", m = " << e.m << ", |B(I_n)| = " << e.count << '\n';
  for (const auto& w : e.warnings) out << "warning: " << w << '\n';
  out << "fixed records (zero-padded free parts of I_1..I_" << e.m - 1 << "):\n";
  for (const auto& r : e.fixed) {
    out << "  (" << r.homological_degree << ", " << r.degree.to_string() << ')';
    if (e.ranks_verified) out << "  rank " << r.rank;
    out << '\n';
  }
  const std::string run = e.m == 1 ? "k" : "k−" + std::to_string(e.m - 1);
  out << "families, k = " << e.m << ".." << e.n << ":\n";
  for (const auto& r : e.families) {
    const auto& a = r.degree.exponents();
    out << "  (" << r.homological_degree << "+(k−" << e.m << "), (";
    for (std::size_t k = 0; k + 1 < a.size(); ++k) out << a[k] << ',';
    out << a.back() << '^' << '(' << run << "),0^(n−k)))";
    if (e.ranks_verified) out << "  rank " << r.rank;
    out << '\n';
  }
  return out.str();
}

}  // namespace symbetti
