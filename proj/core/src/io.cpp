#include "bfd/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace bfd::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string cell(double v) { return format_double(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(const std::string& s) { return s; }

namespace {

// RFC 4180 quoting: cells containing the separator, quotes or newlines are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  os << "# " << t.meta.dump() << "\n";
  for (size_t i = 0; i < t.header.size(); ++i)
    os << csv_escape(t.header[i]) << (i + 1 < t.header.size() ? "," : "");
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << csv_escape(row[i]) << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json j;
  j["meta"] = t.meta;
  j["header"] = t.header;
  j["rows"] = t.rows;
  os << j.dump(2) << "\n";
}

}  // namespace bfd::io
