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
#include "mlculp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <unordered_map>

#include "mlculp/error.hpp"

namespace mlculp {

namespace {

using Kind = LoadError::Kind;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && lower(s.substr(0, prefix.size())) == prefix;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '\'' || s.front() == '"') && s.back() == s.front()) {
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) ++i;
      out.push_back(s[i]);
    }
    return out;
  }
  return std::string(s);
}

/// Splits on `delim`, honouring single and double quotes. Fields are trimmed
/// and unquoted.
std::vector<std::string> split_fields(std::string_view line, char delim) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  char quote = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || (line[i] == delim && quote == 0)) {
      fields.push_back(unquote(line.substr(start, i - start)));
      start = i + 1;
      continue;
    }
    const char ch = line[i];
    if (quote != 0) {
      if (ch == '\\') {
        ++i;
      } else if (ch == quote) {
        quote = 0;
      }
    } else if (ch == '\'' || ch == '"') {
      quote = ch;
    }
  }
  return fields;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string where(std::size_t line, std::string_view column) {
  return "line " + std::to_string(line) + ", column '" + std::string(column) + "'";
}

std::uint8_t parse_label(std::string_view s, std::size_t line, std::string_view column) {
  s = trim(s);
  if (s == "0") return 0;
  if (s == "1") return 1;
  if (s == "?") throw LoadError(Kind::missing_value, "missing label value at " + where(line, column));
  throw LoadError(Kind::non_binary_label,
                  "label value '" + std::string(s) + "' is not 0/1 at " + where(line, column));
}

double parse_feature(std::string_view s, std::size_t line, std::string_view column) {
  s = trim(s);
  if (s.empty() || s == "?") {
    throw LoadError(Kind::missing_value, "missing feature value at " + where(line, column));
  }
  auto v = parse_double(s);
  if (!v) {
    throw LoadError(Kind::malformed_row,
                    "feature value '" + std::string(s) + "' is not numeric at " + where(line, column));
  }
  if (std::isnan(*v)) {
    throw LoadError(Kind::missing_value, "NaN feature value at " + where(line, column));
  }
  if (std::isinf(*v)) {
    throw LoadError(Kind::malformed_row, "infinite feature value at " + where(line, column));
  }
  return *v;
}

struct ArffAttribute {
  std::string name;
  bool nominal = false;
  std::vector<std::string> values;
};

ArffAttribute parse_attribute(std::string_view decl, std::size_t line) {
  // decl is everything after "@attribute".
  decl = trim(decl);
  std::string name;
  std::size_t pos = 0;
  if (!decl.empty() && (decl.front() == '\'' || decl.front() == '"')) {
    const char q = decl.front();
    std::size_t i = 1;
    for (; i < decl.size() && decl[i] != q; ++i) {
      if (decl[i] == '\\') ++i;
    }
    if (i >= decl.size()) {
      throw LoadError(Kind::malformed_header, "unterminated attribute name on line " + std::to_string(line));
    }
    name = unquote(decl.substr(0, i + 1));
    pos = i + 1;
  } else {
    while (pos < decl.size() && !std::isspace(static_cast<unsigned char>(decl[pos])) && decl[pos] != '{') ++pos;
    name = std::string(decl.substr(0, pos));
  }
  std::string_view type = trim(decl.substr(pos));
  if (name.empty() || type.empty()) {
    throw LoadError(Kind::malformed_header, "malformed @attribute on line " + std::to_string(line));
  }
  ArffAttribute attr;
  attr.name = std::move(name);
  if (type.front() == '{') {
    auto close = type.rfind('}');
    if (close == std::string_view::npos) {
      throw LoadError(Kind::malformed_header, "unterminated nominal list on line " + std::to_string(line));
    }
    attr.nominal = true;
    attr.values = split_fields(type.substr(1, close - 1), ',');
    if (attr.values.empty() || (attr.values.size() == 1 && attr.values[0].empty())) {
      throw LoadError(Kind::malformed_header, "empty nominal list on line " + std::to_string(line));
    }
    return attr;
  }
  const std::string t = lower(type);
  if (t == "numeric" || t == "real" || t == "integer") return attr;
  throw LoadError(Kind::unknown_attribute_type,
                  "unsupported attribute type '" + std::string(type) + "' for '" + attr.name +
                      "' on line " + std::to_string(line));
}

void finish(Dataset& data, bool allow_empty) {
  if (data.features.rows() == 0 && !allow_empty) {
    throw LoadError(Kind::empty_dataset, "dataset '" + data.name + "' has no rows");
  }
}

}  // namespace

DatasetFormat parse_dataset_format(std::string_view text) {
  if (text == "mulan-arff" || text == "arff") return DatasetFormat::mulan_arff;
  if (text == "csv") return DatasetFormat::csv;
  throw InvalidArgument("unknown dataset format '" + std::string(text) + "'");
}

std::string_view to_string(DatasetFormat format) noexcept {
  return format == DatasetFormat::csv ? "csv" : "mulan-arff";
}

std::vector<std::string> read_mulan_labels(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  static const std::regex label_re(R"re(<label\s+name\s*=\s*(?:"([^"]*)"|'([^']*)'))re");
  std::vector<std::string> names;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), label_re); it != std::sregex_iterator(); ++it) {
    std::string raw = (*it)[1].matched ? (*it)[1].str() : (*it)[2].str();
    static const std::pair<std::string_view, std::string_view> entities[] = {
        {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&apos;", "'"}, {"&amp;", "&"}};
    for (auto [from, to] : entities) {
      for (std::size_t p = raw.find(from); p != std::string::npos; p = raw.find(from, p + to.size())) {
        raw.replace(p, from.size(), to);
      }
    }
    names.push_back(std::move(raw));
  }
  if (names.empty()) throw LoadError(Kind::malformed_header, "label XML lists no <label name=...> entries");
  return names;
}

std::filesystem::path find_label_xml(const std::filesystem::path& arff_path) {
  auto candidate = arff_path;
  candidate.replace_extension(".xml");
  if (std::filesystem::exists(candidate)) return candidate;
  std::string stem = arff_path.stem().string();
  for (std::string_view suffix : {"-train", "-test", "_train", "_test"}) {
    if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
      candidate = arff_path.parent_path() / (stem.substr(0, stem.size() - suffix.size()) + ".xml");
      if (std::filesystem::exists(candidate)) return candidate;
    }
  }
  return {};
}

Dataset read_arff(std::istream& in, const std::vector<std::string>& label_names, bool allow_empty) {
  if (label_names.empty()) throw InvalidArgument("ARFF input needs label names");
  Dataset data;
  data.label_names = label_names;
  std::vector<ArffAttribute> attrs;
  std::string line;
  std::size_t line_no = 0;
  bool in_data = false;

  // column layout resolved at @data
  std::vector<int> label_slot;       // attribute -> label index or -1
  std::vector<std::size_t> feature_offset;  // attribute -> first feature column
  std::vector<double> feature_row;
  std::vector<std::uint8_t> label_row;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '%') continue;
    if (!in_data) {
      if (starts_with_ci(view, "@relation")) {
        data.name = unquote(view.substr(9));
        // MULAN/MEKA relation names may carry options after ':'
        if (auto colon = data.name.find(':'); colon != std::string::npos) data.name.resize(colon);
      } else if (starts_with_ci(view, "@attribute")) {
        attrs.push_back(parse_attribute(view.substr(10), line_no));
      } else if (starts_with_ci(view, "@data")) {
        in_data = true;
        std::unordered_map<std::string, std::size_t> label_index;
        for (std::size_t c = 0; c < label_names.size(); ++c) label_index.emplace(label_names[c], c);
        std::vector<bool> seen(label_names.size(), false);
        std::size_t next_col = 0;
        for (const auto& a : attrs) {
          auto it = label_index.find(a.name);
          if (it != label_index.end()) {
            label_slot.push_back(static_cast<int>(it->second));
            seen[it->second] = true;
            feature_offset.push_back(0);
            continue;
          }
          label_slot.push_back(-1);
          feature_offset.push_back(next_col);
          ++data.source_attribute_count;
          if (a.nominal) {
            for (const auto& v : a.values) data.feature_names.push_back(a.name + "=" + v);
            next_col += a.values.size();
          } else {
            data.feature_names.push_back(a.name);
            next_col += 1;
          }
        }
        for (std::size_t c = 0; c < seen.size(); ++c) {
          if (!seen[c]) {
            throw LoadError(Kind::unknown_label, "label '" + label_names[c] + "' is not an ARFF attribute");
          }
        }
        feature_row.assign(next_col, 0.0);
        label_row.assign(label_names.size(), 0);
        data.features = FeatureMatrix(0, next_col);
        data.labels = LabelMatrix(0, label_names.size());
      } else {
        throw LoadError(Kind::malformed_header,
                        "unexpected header line " + std::to_string(line_no) + ": '" + std::string(view) + "'");
      }
      continue;
    }
    if (view.front() == '{') {
      throw LoadError(Kind::malformed_row, "sparse ARFF rows are not supported (line " + std::to_string(line_no) + ")");
    }
    auto fields = split_fields(view, ',');
    if (fields.size() != attrs.size()) {
      throw LoadError(Kind::malformed_row, "line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                               " values, expected " + std::to_string(attrs.size()));
    }
    std::fill(feature_row.begin(), feature_row.end(), 0.0);
    for (std::size_t a = 0; a < attrs.size(); ++a) {
      const auto& attr = attrs[a];
      if (label_slot[a] >= 0) {
        label_row[static_cast<std::size_t>(label_slot[a])] = parse_label(fields[a], line_no, attr.name);
      } else if (attr.nominal) {
        if (trim(fields[a]) == "?") {
          throw LoadError(Kind::missing_value, "missing feature value at " + where(line_no, attr.name));
        }
        auto it = std::find(attr.values.begin(), attr.values.end(), fields[a]);
        if (it == attr.values.end()) {
          throw LoadError(Kind::malformed_row, "value '" + fields[a] + "' not declared for nominal attribute at " +
                                                   where(line_no, attr.name));
        }
        feature_row[feature_offset[a] + static_cast<std::size_t>(it - attr.values.begin())] = 1.0;
      } else {
        feature_row[feature_offset[a]] = parse_feature(fields[a], line_no, attr.name);
      }
    }
    data.features.append_row(feature_row);
    data.labels.append_row(label_row);
  }
  if (!in_data) throw LoadError(Kind::malformed_header, "ARFF input has no @data section");
  finish(data, allow_empty);
  return data;
}

Dataset read_csv(std::istream& in, bool allow_empty) {
  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw LoadError(Kind::malformed_header, "CSV input has no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_fields(line, ',');

  enum class Role { id, feature, label };
  std::vector<Role> roles;
  int id_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const auto& h = header[c];
    if (h.empty()) throw LoadError(Kind::malformed_header, "empty column name at position " + std::to_string(c));
    if (h.starts_with("label:")) {
      roles.push_back(Role::label);
      data.label_names.push_back(h.substr(6));
    } else if (h == "id" && id_col < 0) {
      roles.push_back(Role::id);
      id_col = static_cast<int>(c);
    } else {
      roles.push_back(Role::feature);
      data.feature_names.push_back(h);
    }
  }
  data.source_attribute_count = data.feature_names.size();
  data.features = FeatureMatrix(0, data.feature_names.size());
  data.labels = LabelMatrix(0, data.label_names.size());

  std::vector<double> feature_row(data.feature_names.size());
  std::vector<std::uint8_t> label_row(data.label_names.size());
  bool seen_unlabeled = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_fields(line, ',');
    if (fields.size() != header.size()) {
      throw LoadError(Kind::malformed_row, "line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                               " fields, expected " + std::to_string(header.size()));
    }
    std::size_t f = 0;
    std::size_t l = 0;
    std::size_t empty_labels = 0;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      switch (roles[c]) {
        case Role::id:
          data.ids.push_back(fields[c]);
          break;
        case Role::feature:
          feature_row[f++] = parse_feature(fields[c], line_no, header[c]);
          break;
        case Role::label:
          if (trim(fields[c]).empty()) {
            ++empty_labels;
            label_row[l++] = 0;
          } else {
            label_row[l++] = parse_label(fields[c], line_no, header[c]);
          }
          break;
      }
    }
    const bool unlabeled = !label_row.empty() && empty_labels == label_row.size();
    if (empty_labels != 0 && !unlabeled) {
      throw LoadError(Kind::missing_value, "partially empty label cells on line " + std::to_string(line_no));
    }
    if (unlabeled) {
      seen_unlabeled = true;
    } else if (seen_unlabeled) {
      throw LoadError(Kind::malformed_row,
                      "labeled row on line " + std::to_string(line_no) + " follows an unlabeled row");
    } else if (!label_row.empty()) {
      data.labels.append_row(label_row);
    }
    data.features.append_row(feature_row);
  }
  finish(data, allow_empty);
  return data;
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw LoadError(Kind::io, "cannot open '" + path.string() + "'");
  Dataset data;
  if (format == DatasetFormat::csv) {
    data = read_csv(in, options.allow_empty);
  } else {
    std::vector<std::string> names = options.label_names;
    if (names.empty()) {
      auto xml = options.label_xml.empty() ? find_label_xml(path) : options.label_xml;
      if (xml.empty()) {
        throw LoadError(Kind::io, "no label XML next to '" + path.string() + "' and no label names given");
      }
      std::ifstream xin(xml);
      if (!xin) throw LoadError(Kind::io, "cannot open '" + xml.string() + "'");
      names = read_mulan_labels(xin);
    }
    data = read_arff(in, names, options.allow_empty);
  }
  if (data.name.empty()) data.name = path.stem().string();
  if (options.scale) min_max_scale(data.features);
  return data;
}

Dataset load_datasets(const std::vector<std::filesystem::path>& paths, DatasetFormat format,
                      const LoadOptions& options) {
  if (paths.empty()) throw InvalidArgument("no dataset paths given");
  LoadOptions raw = options;
  raw.scale = false;
  raw.allow_empty = true;
  Dataset out = load_dataset(paths.front(), format, raw);
  for (std::size_t i = 1; i < paths.size(); ++i) {
    Dataset next = load_dataset(paths[i], format, raw);
    if (next.feature_names != out.feature_names || next.label_names != out.label_names) {
      throw LoadError(Kind::malformed_header, "'" + paths[i].string() + "' has a different schema from '" +
                                                  paths.front().string() + "'");
    }
    if (out.num_unlabeled() != 0 && next.num_labeled() != 0) {
      throw LoadError(Kind::malformed_row, "cannot append labeled rows after unlabeled ones");
    }
    // labeled rows stay in front of unlabeled ones
    FeatureMatrix features = vstack(out.features, next.features);
    out.labels = vstack(out.labels, next.labels);
    out.features = std::move(features);
    out.ids.insert(out.ids.end(), next.ids.begin(), next.ids.end());
  }
  if (out.features.rows() == 0 && !options.allow_empty) {
    throw LoadError(Kind::empty_dataset, "dataset '" + out.name + "' has no rows");
  }
  if (options.scale) min_max_scale(out.features);
  return out;
}

void write_csv(std::ostream& out, const Dataset& data) {
  const bool with_ids = !data.ids.empty();
  bool first = true;
  auto sep = [&] {
    if (!first) out << ',';
    first = false;
  };
  if (with_ids) {
    sep();
    out << "id";
  }
  for (std::size_t c = 0; c < data.num_features(); ++c) {
    sep();
    out << (data.feature_names.empty() ? "f" + std::to_string(c) : data.feature_names[c]);
  }
  for (const auto& name : data.label_names) {
    sep();
    out << "label:" << name;
  }
  out << '\n';
  char buf[64];
  for (std::size_t r = 0; r < data.features.rows(); ++r) {
    first = true;
    if (with_ids) {
      sep();
      out << data.ids[r];
    }
    for (double v : data.features.row(r)) {
      sep();
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out.write(buf, end - buf);
    }
    for (std::size_t c = 0; c < data.num_labels(); ++c) {
      sep();
      if (r < data.num_labeled()) out << static_cast<int>(data.labels(r, c));
    }
    out << '\n';
  }
}

}  // namespace mlculp
