// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robust_summary/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <sstream>
#include <string_view>

#include "json.hpp"

namespace robust_summary {
namespace {

constexpr std::string_view kSummaryMagic = "robust-summary";
constexpr std::string_view kGridMagic = "robust-grid";
constexpr int kFormatVersion = 1;

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool IsSkippable(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

template <typename T>
std::optional<T> ParseNumber(std::string_view s) {
  s = Trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) return std::nullopt;
  }
  return value;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::uint64_t Fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Appends the checksum line to `body` and writes the whole document.
void WriteChecked(const std::string& body, std::ostream& out) {
  out << body << "checksum " << Hex(Fnv1a(body)) << '\n';
  if (!out) throw std::runtime_error("write failed");
}

// Verifies the trailing checksum and returns the body lines.
std::vector<std::string> ReadChecked(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  const std::size_t cut = text.rfind('\n');
  const std::string_view last =
      cut == std::string::npos ? std::string_view(text)
                               : std::string_view(text).substr(cut + 1);
  const auto tokens = SplitWhitespace(last);
  if (tokens.size() != 2 || tokens[0] != "checksum") {
    throw FormatError("checksum failure: missing checksum line");
  }
  const std::string_view body =
      cut == std::string::npos ? std::string_view()
                               : std::string_view(text).substr(0, cut + 1);
  if (tokens[1] != Hex(Fnv1a(body))) {
    throw FormatError("checksum failure: document is corrupt or truncated");
  }
  std::vector<std::string> lines;
  std::istringstream body_in{std::string(body)};
  for (std::string line; std::getline(body_in, line);) lines.push_back(line);
  return lines;
}

class LineCursor {
 public:
  explicit LineCursor(const std::vector<std::string>& lines) : lines_(lines) {}

  // Next line's tokens; the first must equal `keyword`.
  std::vector<std::string_view> Expect(std::string_view keyword) {
    if (pos_ >= lines_.size()) {
      throw FormatError("unexpected end of document, wanted '" +
                        std::string(keyword) + "'");
    }
    auto tokens = SplitWhitespace(lines_[pos_++]);
    if (tokens.empty() || tokens[0] != keyword) {
      Fail("expected '" + std::string(keyword) + "'");
    }
    return tokens;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(pos_) + ": " + what);
  }

  template <typename T>
  T Number(std::string_view token) const {
    auto v = ParseNumber<T>(token);
    if (!v) Fail("bad number '" + std::string(token) + "'");
    return *v;
  }

  bool done() const { return pos_ >= lines_.size(); }

 private:
  const std::vector<std::string>& lines_;
  std::size_t pos_ = 0;
};

void AppendIds(std::ostringstream& os, std::span<const ElementId> ids) {
  for (ElementId e : ids) os << ' ' << Index(e);
}

void WriteSummaryBody(const Summary& s, std::ostringstream& os) {
  const StructurePlan& plan = s.plan();
  os << "k " << plan.k << '\n';
  os << "w " << plan.w << '\n';
  os << "tau " << FormatDouble(plan.tau) << '\n';
  os << "stats " << s.stats().elements_seen << ' '
     << s.stats().elements_stored << ' ' << s.stats().oracle_calls << '\n';
  os << "order " << s.InsertionOrder().size();
  AppendIds(os, s.InsertionOrder());
  os << '\n';
  for (const Bucket& b : s.buckets()) {
    os << "bucket " << b.partition << ' ' << b.index << ' '
       << FormatDouble(b.value) << ' ' << b.members.size();
    AppendIds(os, b.members);
    os << '\n';
  }
  os << "end\n";
}

std::vector<ElementId> ReadIds(const LineCursor& cur,
                               const std::vector<std::string_view>& tokens,
                               std::size_t first) {
  const auto count = cur.Number<std::size_t>(tokens[first - 1]);
  if (tokens.size() != first + count) cur.Fail("id count mismatch");
  std::vector<ElementId> ids;
  ids.reserve(count);
  for (std::size_t t = first; t < tokens.size(); ++t) {
    ids.push_back(ElementId{cur.Number<std::uint32_t>(tokens[t])});
  }
  return ids;
}

Summary ReadSummaryBody(LineCursor& cur,
                        const SubmodularObjective* revalidate) {
  auto t = cur.Expect("k");
  if (t.size() != 2) cur.Fail("malformed k");
  const auto k = cur.Number<std::size_t>(t[1]);
  t = cur.Expect("w");
  if (t.size() != 2) cur.Fail("malformed w");
  const auto w = cur.Number<std::size_t>(t[1]);
  t = cur.Expect("tau");
  if (t.size() != 2) cur.Fail("malformed tau");
  const auto tau = cur.Number<double>(t[1]);
  t = cur.Expect("stats");
  if (t.size() != 4) cur.Fail("malformed stats");
  SummaryStats stats{.elements_seen = cur.Number<std::uint64_t>(t[1]),
                     .elements_stored = cur.Number<std::uint64_t>(t[2]),
                     .oracle_calls = cur.Number<std::uint64_t>(t[3])};
  t = cur.Expect("order");
  if (t.size() < 2) cur.Fail("malformed order");
  std::vector<ElementId> order = ReadIds(cur, t, 2);

  StructurePlan plan;
  try {
    plan = PlanStructure(k, w, tau);
  } catch (const std::invalid_argument& e) {
    cur.Fail(e.what());
  }
  std::vector<Bucket> buckets;
  for (const auto& p : plan.partitions) {
    for (std::size_t j = 0; j < p.bucket_count; ++j) {
      t = cur.Expect("bucket");
      if (t.size() < 5) cur.Fail("malformed bucket");
      Bucket b{.partition = cur.Number<int>(t[1]),
               .index = cur.Number<int>(t[2]),
               .capacity = p.capacity,
               .threshold = p.threshold,
               .members = ReadIds(cur, t, 5),
               .value = cur.Number<double>(t[3])};
      if (revalidate) {
        const SetValue fresh = revalidate->Value(b.members);
        if (std::abs(fresh - b.value) >
            1e-9 * std::max({1.0, std::abs(fresh), std::abs(b.value)})) {
          cur.Fail("cached bucket value disagrees with the objective");
        }
      }
      buckets.push_back(std::move(b));
    }
  }
  cur.Expect("end");
  try {
    return Summary::Restore(std::move(plan), std::move(buckets),
                            std::move(order), stats);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void ExpectHeader(LineCursor& cur, std::string_view magic) {
  auto t = cur.Expect(magic);
  if (t.size() != 2 || cur.Number<int>(t[1]) != kFormatVersion) {
    cur.Fail("unsupported version (expected " + std::to_string(kFormatVersion) +
             ")");
  }
}

}  // namespace

EdgeListDocument ParseEdgeList(std::istream& in, bool directed) {
  EdgeListDocument doc;
  doc.directed = directed;
  std::vector<ElementId> nodes;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (IsSkippable(line)) continue;
    const auto tokens = SplitWhitespace(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node ids, got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    const auto u = ParseNumber<std::uint32_t>(tokens[0]);
    const auto v = ParseNumber<std::uint32_t>(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "node ids must be non-negative");
    doc.edges.emplace_back(ElementId{*u}, ElementId{*v});
    nodes.push_back(ElementId{*u});
    nodes.push_back(ElementId{*v});
  }
  doc.universe = ElementSet(std::move(nodes));
  return doc;
}

EdgeListDocument LoadEdgeList(const std::filesystem::path& path,
                              bool directed) {
  auto in = OpenForRead(path);
  return ParseEdgeList(in, directed);
}

void WriteEdgeList(const EdgeListDocument& doc, std::ostream& out) {
  out << "# " << (doc.directed ? "directed" : "undirected") << " edge list, "
      << doc.edges.size() << " edges\n";
  for (const auto& [u, v] : doc.edges) out << Index(u) << ' ' << Index(v) << '\n';
}

void SaveEdgeList(const EdgeListDocument& doc,
                  const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteEdgeList(doc, out);
}

std::unique_ptr<CoverageObjective> MakeCoverageObjective(
    const EdgeListDocument& doc) {
  return std::make_unique<CoverageObjective>(doc.edges, doc.directed,
                                             doc.universe.ids());
}

ElementSet FeatureTable::Ids() const {
  std::vector<ElementId> ids;
  for (const auto& r : rows) ids.push_back(r.id);
  return ElementSet(std::move(ids));
}

FeatureTable ParseFeatureTable(std::istream& in) {
  FeatureTable table;
  std::size_t line_no = 0;
  std::string header;
  while (std::getline(in, header)) {
    ++line_no;
    if (!IsSkippable(header)) break;
    header.clear();
  }
  if (Trim(header).empty()) throw ParseError(line_no, "missing header row");
  const char delim = header.find('\t') != std::string::npos ? '\t' : ',';

  std::optional<std::size_t> id_col, genre_col, pop_col;
  std::map<std::size_t, std::size_t> feature_col;  // feature index -> column
  const auto names = Split(header, delim);
  for (std::size_t c = 0; c < names.size(); ++c) {
    const std::string_view name = Trim(names[c]);
    auto claim = [&](std::optional<std::size_t>& slot) {
      if (slot) throw ParseError(line_no, "duplicate column " + std::string(name));
      slot = c;
    };
    if (name == "id") {
      claim(id_col);
    } else if (name == "genres") {
      claim(genre_col);
    } else if (name == "popularity") {
      claim(pop_col);
    } else if (name.size() > 1 && name[0] == 'f' &&
               ParseNumber<std::size_t>(name.substr(1))) {
      const auto index = *ParseNumber<std::size_t>(name.substr(1));
      if (!feature_col.emplace(index, c).second) {
        throw ParseError(line_no, "duplicate column " + std::string(name));
      }
    } else {
      throw ParseError(line_no, "unknown column '" + std::string(name) + "'");
    }
  }
  if (!id_col) throw ParseError(line_no, "header lacks an id column");
  if (feature_col.empty()) throw ParseError(line_no, "no feature columns");
  for (std::size_t d = 0; d < feature_col.size(); ++d) {
    if (!feature_col.contains(d)) {
      throw ParseError(line_no, "missing feature column f" + std::to_string(d));
    }
  }
  table.dimension = feature_col.size();
  table.has_genres = genre_col.has_value();
  table.has_popularity = pop_col.has_value();

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (IsSkippable(line)) continue;
    const auto cells = Split(line, delim);
    if (cells.size() != names.size()) {
      throw ParseError(line_no, "expected " + std::to_string(names.size()) +
                                    " fields, got " +
                                    std::to_string(cells.size()));
    }
    FeatureRow row;
    const auto id = ParseNumber<std::uint32_t>(cells[*id_col]);
    if (!id) throw ParseError(line_no, "bad id");
    row.id = ElementId{*id};
    if (genre_col) {
      const std::string_view g = Trim(cells[*genre_col]);
      if (!g.empty()) {
        for (auto tag : Split(g, '|')) {
          if (!Trim(tag).empty()) row.genres.emplace_back(Trim(tag));
        }
      }
    }
    if (pop_col) {
      const auto pop = ParseNumber<double>(cells[*pop_col]);
      if (!pop || *pop < 0.0) {
        throw ParseError(line_no, "popularity must be a non-negative number");
      }
      row.popularity = *pop;
    }
    row.features.resize(table.dimension);
    for (const auto& [d, c] : feature_col) {
      const auto v = ParseNumber<double>(cells[c]);
      if (!v) {
        throw ParseError(line_no, "non-numeric feature f" + std::to_string(d));
      }
      row.features[d] = *v;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

FeatureTable LoadFeatureTable(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ParseFeatureTable(in);
}

void WriteFeatureTable(const FeatureTable& table, std::ostream& out) {
  out << "id";
  if (table.has_genres) out << ",genres";
  if (table.has_popularity) out << ",popularity";
  for (std::size_t d = 0; d < table.dimension; ++d) out << ",f" << d;
  out << '\n';
  for (const auto& row : table.rows) {
    out << Index(row.id);
    if (table.has_genres) {
      out << ',';
      for (std::size_t g = 0; g < row.genres.size(); ++g) {
        if (g) out << '|';
        out << row.genres[g];
      }
    }
    if (table.has_popularity) out << ',' << FormatDouble(row.popularity);
    for (double v : row.features) out << ',' << FormatDouble(v);
    out << '\n';
  }
}

void SaveFeatureTable(const FeatureTable& table,
                      const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteFeatureTable(table, out);
}

std::vector<double> ParseVector(std::istream& in) {
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (IsSkippable(line)) continue;
    const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
    std::vector<double> out;
    for (auto cell : Split(line, delim)) {
      const auto v = ParseNumber<double>(cell);
      if (!v) throw ParseError(line_no, "non-numeric vector entry");
      out.push_back(*v);
    }
    return out;
  }
  throw ParseError(line_no, "no vector found");
}

std::vector<double> LoadVector(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ParseVector(in);
}

void SaveVector(const std::vector<double>& vec,
                const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  for (std::size_t d = 0; d < vec.size(); ++d) {
    if (d) out << ',';
    out << FormatDouble(vec[d]);
  }
  out << '\n';
}

std::unique_ptr<MovieObjective> MakeMovieObjective(
    const FeatureTable& table, std::vector<double> user_vec, double alpha) {
  std::vector<std::pair<ElementId, std::vector<double>>> movies;
  movies.reserve(table.rows.size());
  for (const auto& row : table.rows) movies.emplace_back(row.id, row.features);
  return std::make_unique<MovieObjective>(std::move(user_vec),
                                          std::move(movies), alpha);
}

ElementSet ParseRemovalList(std::istream& in) {
  std::vector<ElementId> ids;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (IsSkippable(line)) continue;
    const auto id = ParseNumber<std::uint32_t>(line);
    if (!id) throw ParseError(line_no, "expected one non-negative id");
    ids.push_back(ElementId{*id});
  }
  return ElementSet(std::move(ids));
}

ElementSet LoadRemovalList(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ParseRemovalList(in);
}

void WriteRemovalList(const ElementSet& removed, std::ostream& out) {
  for (ElementId e : removed) out << Index(e) << '\n';
}

void SaveRemovalList(const ElementSet& removed,
                     const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteRemovalList(removed, out);
}

void WriteSummary(const Summary& summary, std::ostream& out) {
  std::ostringstream os;
  os << kSummaryMagic << ' ' << kFormatVersion << '\n';
  WriteSummaryBody(summary, os);
  WriteChecked(os.str(), out);
}

Summary ReadSummary(std::istream& in, const SubmodularObjective* revalidate) {
  const auto lines = ReadChecked(in);
  LineCursor cur(lines);
  ExpectHeader(cur, kSummaryMagic);
  Summary s = ReadSummaryBody(cur, revalidate);
  if (!cur.done()) cur.Fail("trailing content");
  return s;
}

void SaveSummary(const Summary& summary, const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteSummary(summary, out);
}

Summary LoadSummary(const std::filesystem::path& path,
                    const SubmodularObjective* revalidate) {
  auto in = OpenForRead(path);
  return ReadSummary(in, revalidate);
}

void WriteGrid(const ThresholdGrid& grid, std::ostream& out) {
  std::ostringstream os;
  os << kGridMagic << ' ' << kFormatVersion << '\n';
  os << "params " << grid.k() << ' ' << grid.m() << ' ' << grid.w() << ' '
     << FormatDouble(grid.epsilon()) << '\n';
  os << "leaders " << grid.leaders().size() << '\n';
  for (const auto& l : grid.leaders()) {
    os << "leader " << Index(l.id) << ' ' << FormatDouble(l.value) << '\n';
  }
  os << "instances " << grid.instances().size() << '\n';
  for (const auto& [exponent, summary] : grid.instances()) {
    os << "instance " << exponent << '\n';
    WriteSummaryBody(summary, os);
  }
  WriteChecked(os.str(), out);
}

ThresholdGrid ReadGrid(std::istream& in) {
  const auto lines = ReadChecked(in);
  LineCursor cur(lines);
  ExpectHeader(cur, kGridMagic);
  auto t = cur.Expect("params");
  if (t.size() != 5) cur.Fail("malformed params");
  const auto k = cur.Number<std::size_t>(t[1]);
  const auto m = cur.Number<std::size_t>(t[2]);
  const auto w = cur.Number<std::size_t>(t[3]);
  const auto epsilon = cur.Number<double>(t[4]);
  t = cur.Expect("leaders");
  if (t.size() != 2) cur.Fail("malformed leaders");
  std::vector<LeaderEntry> leaders(cur.Number<std::size_t>(t[1]));
  for (auto& l : leaders) {
    t = cur.Expect("leader");
    if (t.size() != 3) cur.Fail("malformed leader");
    l = LeaderEntry{ElementId{cur.Number<std::uint32_t>(t[1])},
                    cur.Number<double>(t[2])};
  }
  t = cur.Expect("instances");
  if (t.size() != 2) cur.Fail("malformed instances");
  const auto count = cur.Number<std::size_t>(t[1]);
  std::map<int, Summary> instances;
  for (std::size_t i = 0; i < count; ++i) {
    t = cur.Expect("instance");
    if (t.size() != 2) cur.Fail("malformed instance");
    const int exponent = cur.Number<int>(t[1]);
    if (!instances.emplace(exponent, ReadSummaryBody(cur, nullptr)).second) {
      cur.Fail("duplicate instance");
    }
  }
  if (!cur.done()) cur.Fail("trailing content");
  try {
    return ThresholdGrid::Restore(k, m, epsilon, w, std::move(leaders),
                                  std::move(instances));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void SaveGrid(const ThresholdGrid& grid, const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteGrid(grid, out);
}

ThresholdGrid LoadGrid(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ReadGrid(in);
}

std::string RobustnessReportJson(const RobustnessReport& report) {
  nlohmann::json j;
  j["instance"] = report.instance;
  j["mode"] = report.mode == ThresholdMode::kGrid ? "grid" : "single-tau";
  j["n"] = report.n;
  j["k"] = report.k;
  j["m"] = report.m;
  j["w"] = report.w;
  j["epsilon"] = report.epsilon;
  j["c_target"] = report.c_target;
  if (std::isfinite(report.worst_ratio)) {
    j["worst_ratio"] = report.worst_ratio;
  } else {
    j["worst_ratio"] = nullptr;
  }
  std::vector<std::uint32_t> worst;
  for (ElementId e : report.worst_removal) worst.push_back(Index(e));
  j["worst_E"] = worst;
  j["cases_checked"] = report.cases_checked;
  j["zero_opt_skipped"] = report.zero_opt_skipped;
  j["passed"] = report.passed();
  return j.dump();
}

}  // namespace robust_summary
