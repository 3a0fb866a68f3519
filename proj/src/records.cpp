// Copyright 2026 The cgt-domineering Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <istream>
#include <ostream>

#include "cgt/search.hpp"
#include "cgt/value_text.hpp"

namespace cgt::domineering {
namespace {

constexpr std::string_view kMagic = "#cgt-search v1 ";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) return fields;
    start = tab + 1;
  }
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 3) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

void write_records(std::ostream& out, const RecordsFile& file) {
  out << kMagic << file.width << 'x' << file.height << '\n';
  for (const SearchRecord& r : file.records) {
    out << display_grid(r.position) << '\t' << r.value << '\t' << r.temperature.to_string() << '\n';
  }
}

RecordsFile read_records(std::istream& in) {
  RecordsFile file;
  std::string line;
  if (!std::getline(in, line)) throw RecordsError("missing header", 1);
  std::string_view header(line);
  const std::size_t x = header.find('x', kMagic.size());
  if (!header.starts_with(kMagic) || x == std::string_view::npos ||
      !parse_int(header.substr(kMagic.size(), x - kMagic.size()), file.width) ||
      !parse_int(header.substr(x + 1), file.height) || file.width < 1 || file.width > kMaxSide ||
      file.height < 1 || file.height > kMaxSide) {
    throw RecordsError("expected header \"#cgt-search v1 <width>x<height>\"", 1);
  }

  GameStore scratch;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw RecordsError("expected 3 tab-separated fields", line_no);
    SearchRecord r;
    try {
      r.position = parse_grid(fields[0]);
    } catch (const std::invalid_argument& e) {
      throw RecordsError(std::string("bad grid: ") + e.what(), line_no);
    }
    if (r.position.width() != file.width || r.position.height() != file.height) {
      throw RecordsError("grid size differs from the header", line_no);
    }
    try {
      parse_value(scratch, fields[1]);
    } catch (const ParseError& e) {
      throw RecordsError(std::string("bad value: ") + e.what(), line_no);
    }
    r.value = std::string(fields[1]);
    auto t = Dyadic::parse(fields[2]);
    if (!t) throw RecordsError("bad temperature \"" + std::string(fields[2]) + "\"", line_no);
    r.temperature = *t;
    file.records.push_back(std::move(r));
  }
  return file;
}

void write_records_file(const std::string& path, const RecordsFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_records(out, file);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

RecordsFile read_records_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_records(in);
}

}  // namespace cgt::domineering
