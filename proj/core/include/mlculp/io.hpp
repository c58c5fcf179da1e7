/*
   Copyright (c) 2026 The mlculp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

// Dataset ingestion.
//
// Two formats are understood:
//
//  * a dense ARFF subset (`@relation`, `@attribute <name> numeric|real|integer|{v1,...}`,
//    `@data`) with label names taken from a MULAN label XML
//    (`<label name="..."/>`) or passed explicitly. Nominal features are one-hot
//    encoded in declaration order.
//  * CSV with a header row. Columns prefixed `label:` are binary labels, a column
//    named `id` carries external identifiers, everything else is a numeric
//    feature. Rows whose label cells are all empty are unlabeled and must come
//    after every labeled row.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mlculp/dataset.hpp"

namespace mlculp {

enum class DatasetFormat { mulan_arff, csv };

DatasetFormat parse_dataset_format(std::string_view text);
std::string_view to_string(DatasetFormat format) noexcept;

struct LoadOptions {
  /// Label attribute names for ARFF input. When empty, the MULAN XML next to
  /// the ARFF file (or `label_xml`) is read.
  std::vector<std::string> label_names;
  std::filesystem::path label_xml;
  /// Min-max scale every feature column after loading.
  bool scale = true;
  /// Accept a file with a header and no rows.
  bool allow_empty = false;
};

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& options = {});

/// Loads several files of the same schema and stacks their rows in order.
Dataset load_datasets(const std::vector<std::filesystem::path>& paths, DatasetFormat format,
                      const LoadOptions& options = {});

Dataset read_arff(std::istream& in, const std::vector<std::string>& label_names,
                  bool allow_empty = false);
Dataset read_csv(std::istream& in, bool allow_empty = false);

/// Label names in document order from a MULAN label XML.
std::vector<std::string> read_mulan_labels(std::istream& in);

/// Path of the MULAN XML expected next to an ARFF file (`scene-train.arff` and
/// `scene.arff` both map to `scene.xml`), or empty when none exists.
std::filesystem::path find_label_xml(const std::filesystem::path& arff_path);

/// Writes features and labels in the CSV dialect read by `read_csv`. Values
/// are written in shortest round-trip form, so reloading is bit-exact.
void write_csv(std::ostream& out, const Dataset& data);

}  // namespace mlculp
