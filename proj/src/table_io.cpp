#include "sgp/table_io.hpp"

#include <fstream>
#include <sstream>

namespace sgp {

namespace {

// Next non-comment line; false at end of stream.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty() && line[0] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

}  // namespace

RawTable read_table(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) {
    throw format_error("empty input");
  }
  if (line != "sgp-table 1") {
    throw format_error("bad magic line: expected 'sgp-table 1'");
  }
  if (!next_line(in, line)) {
    throw format_error("missing order line");
  }
  int n = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> n) || n <= 0) {
      throw format_error("bad order line: '" + line + "'");
    }
    std::string extra;
    if (ss >> extra) {
      throw format_error("trailing tokens on order line");
    }
  }

  RawTable table;
  table.entries.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (!next_line(in, line)) {
      throw format_error("table truncated at row " + std::to_string(i));
    }
    std::istringstream ss(line);
    int v;
    while (ss >> v) {
      table.entries[i].push_back(v);
    }
    if (!ss.eof()) {
      throw format_error("non-numeric entry in row " + std::to_string(i));
    }
    if (static_cast<int>(table.entries[i].size()) != n) {
      throw format_error("row " + std::to_string(i) + " has "
                         + std::to_string(table.entries[i].size())
                         + " entries, expected " + std::to_string(n));
    }
    for (int v2 : table.entries[i]) {
      if (v2 < 0 || v2 >= n) {
        throw format_error("entry out of range in row " + std::to_string(i));
      }
    }
  }

  while (next_line(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream ss(line);
    std::string keyword;
    ss >> keyword;
    if (keyword != "name") {
      throw format_error("unexpected trailing line: '" + line + "'");
    }
    int idx;
    std::string token;
    if (!(ss >> idx >> token) || idx < 0 || idx >= n) {
      throw format_error("bad name line: '" + line + "'");
    }
    if (table.names.empty()) {
      for (int i = 0; i < n; ++i) {
        table.names.push_back("e" + std::to_string(i));
      }
    }
    table.names[idx] = token;
  }
  return table;
}

RawTable read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw format_error("cannot open '" + path + "'");
  }
  return read_table(in);
}

void write_table(std::ostream& out, const RawTable& table) {
  int const n = table.order();
  out << "sgp-table 1\n" << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << table.entries[i][j];
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < table.names.size(); ++i) {
    out << "name " << i << ' ' << table.names[i] << '\n';
  }
}

void write_table_file(const std::string& path, const RawTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw format_error("cannot write '" + path + "'");
  }
  write_table(out, table);
}

}  // namespace sgp
