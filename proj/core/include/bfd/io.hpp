#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bfd::io {

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);
std::string cell(double v);
std::string cell(int v);
std::string cell(const std::string& s);

// A result table: JSON metadata plus pre-formatted string cells, so CSV
// and JSON emission are byte-deterministic.
struct Table {
  nlohmann::ordered_json meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// '#'-prefixed single-line JSON metadata header, then CSV.
void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

}  // namespace bfd::io
