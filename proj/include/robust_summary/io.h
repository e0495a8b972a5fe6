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

//
// Dataset loading and artifact persistence.
//
// Edge list:     "<src> <dst>" per line, whitespace separated; blank lines and
//                lines starting with '#' are ignored.
// Feature table: header row naming id, optional genres and popularity, and
//                f0..f(d-1); comma or tab separated; genres split on '|'.
// Removal list:  one id per line ('#' comments allowed).
// Summary/grid:  line-oriented text with a version header and a trailing
//                FNV-1a checksum over everything before the checksum line.

#ifndef ROBUST_SUMMARY_IO_H_
#define ROBUST_SUMMARY_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "robust_summary/element.h"
#include "robust_summary/exact.h"
#include "robust_summary/objective.h"
#include "robust_summary/summary.h"
#include "robust_summary/threshold_grid.h"

namespace robust_summary {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Version mismatch, checksum failure or structurally invalid document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeListDocument {
  bool directed = true;
  std::vector<CoverageObjective::Edge> edges;
  ElementSet universe;
};

EdgeListDocument ParseEdgeList(std::istream& in, bool directed);
EdgeListDocument LoadEdgeList(const std::filesystem::path& path,
                              bool directed);
void WriteEdgeList(const EdgeListDocument& doc, std::ostream& out);
void SaveEdgeList(const EdgeListDocument& doc,
                  const std::filesystem::path& path);

std::unique_ptr<CoverageObjective> MakeCoverageObjective(
    const EdgeListDocument& doc);

struct FeatureRow {
  ElementId id{};
  std::vector<std::string> genres;
  double popularity = 0.0;
  std::vector<double> features;

  friend bool operator==(const FeatureRow&, const FeatureRow&) = default;
};

struct FeatureTable {
  std::size_t dimension = 0;
  bool has_genres = false;
  bool has_popularity = false;
  std::vector<FeatureRow> rows;

  ElementSet Ids() const;
  friend bool operator==(const FeatureTable&, const FeatureTable&) = default;
};

FeatureTable ParseFeatureTable(std::istream& in);
FeatureTable LoadFeatureTable(const std::filesystem::path& path);
void WriteFeatureTable(const FeatureTable& table, std::ostream& out);
void SaveFeatureTable(const FeatureTable& table,
                      const std::filesystem::path& path);

// A single row of delimiter-separated reals (a user's feature vector).
std::vector<double> ParseVector(std::istream& in);
std::vector<double> LoadVector(const std::filesystem::path& path);
void SaveVector(const std::vector<double>& vec,
                const std::filesystem::path& path);

std::unique_ptr<MovieObjective> MakeMovieObjective(
    const FeatureTable& table, std::vector<double> user_vec, double alpha);

ElementSet ParseRemovalList(std::istream& in);
ElementSet LoadRemovalList(const std::filesystem::path& path);
void WriteRemovalList(const ElementSet& removed, std::ostream& out);
void SaveRemovalList(const ElementSet& removed,
                     const std::filesystem::path& path);

// When `revalidate` is given every cached bucket value is recomputed and a
// FormatError is thrown if one disagrees beyond a 1e-9 relative tolerance.
void WriteSummary(const Summary& summary, std::ostream& out);
Summary ReadSummary(std::istream& in,
                    const SubmodularObjective* revalidate = nullptr);
void SaveSummary(const Summary& summary, const std::filesystem::path& path);
Summary LoadSummary(const std::filesystem::path& path,
                    const SubmodularObjective* revalidate = nullptr);

void WriteGrid(const ThresholdGrid& grid, std::ostream& out);
ThresholdGrid ReadGrid(std::istream& in);
void SaveGrid(const ThresholdGrid& grid, const std::filesystem::path& path);
ThresholdGrid LoadGrid(const std::filesystem::path& path);

// Machine-readable (JSON) form of a verification report.
std::string RobustnessReportJson(const RobustnessReport& report);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_IO_H_
