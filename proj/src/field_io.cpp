#include "altexp/field_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "altexp/errors.hpp"

namespace altexp {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line, char separator) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == separator) {
      fields.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(current);
  for (auto& f : fields) {
    const auto first = f.find_first_not_of(" \t");
    const auto last = f.find_last_not_of(" \t");
    f = first == std::string::npos ? std::string() : f.substr(first, last - first + 1);
  }
  return fields;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

template <class T>
T parse_number(const std::string& text, std::size_t line, const std::string& column) {
  T value{};
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  // from_chars rejects a leading '+'.
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw FormatError(at_line(line) + "column " + column + ": cannot parse '" + text + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw FormatError(at_line(line) + "column " + column + ": non-finite value");
    }
  }
  return value;
}

}  // namespace

FileFormat parse_format(std::string_view name) {
  if (name == "json") return FileFormat::json;
  if (name == "csv") return FileFormat::csv;
  throw FormatError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::optional<FileFormat> format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const auto ext = path.substr(dot + 1);
  if (ext == "json") return FileFormat::json;
  if (ext == "csv") return FileFormat::csv;
  return std::nullopt;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

KeyedRecords read_json(std::istream& in) {
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  KeyedRecords records;
  try {
    if (!doc.is_object()) throw FormatError("top-level JSON value must be an object");
    if (!doc.contains("n") || !doc.contains("entries")) {
      throw FormatError("JSON object needs \"n\" and \"entries\"");
    }
    records.n = doc.at("n").get<int>();
    if (doc.contains("N")) records.N = doc.at("N").get<int>();
    const auto& entries = doc.at("entries");
    if (!entries.is_array()) throw FormatError("\"entries\" must be an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      const std::string where = "entry " + std::to_string(i) + ": ";
      if (!e.is_object() || !e.contains("key") || !e.contains("re") || !e.contains("im")) {
        throw FormatError(where + "needs \"key\", \"re\" and \"im\"");
      }
      auto key = e.at("key").get<std::vector<int>>();
      if (static_cast<int>(key.size()) != records.n) {
        throw FormatError(where + "key has " + std::to_string(key.size()) +
                          " entries, expected " + std::to_string(records.n));
      }
      records.entries.emplace_back(std::move(key),
                                   Complex(e.at("re").get<double>(), e.at("im").get<double>()));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON field: ") + e.what());
  }
  if (records.n < 1) throw FormatError("\"n\" must be positive");
  return records;
}

KeyedRecords read_csv(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  KeyedRecords records;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line, ',');
    if (!have_header) {
      if (fields.size() < 3 || fields[fields.size() - 2] != "re" || fields.back() != "im") {
        throw FormatError(at_line(line_number) + "header must be key_1,...,key_n,re,im");
      }
      records.n = static_cast<int>(fields.size()) - 2;
      for (int i = 0; i < records.n; ++i) {
        if (fields[i] != "key_" + std::to_string(i + 1)) {
          throw FormatError(at_line(line_number) + "expected column key_" +
                            std::to_string(i + 1) + ", got '" + fields[i] + "'");
        }
      }
      have_header = true;
      continue;
    }
    if (static_cast<int>(fields.size()) != records.n + 2) {
      throw FormatError(at_line(line_number) + "expected " + std::to_string(records.n + 2) +
                        " fields, got " + std::to_string(fields.size()));
    }
    std::vector<int> key(records.n);
    for (int i = 0; i < records.n; ++i) {
      key[i] = parse_number<int>(fields[i], line_number, "key_" + std::to_string(i + 1));
    }
    const double re = parse_number<double>(fields[records.n], line_number, "re");
    const double im = parse_number<double>(fields[records.n + 1], line_number, "im");
    records.entries.emplace_back(std::move(key), Complex(re, im));
  }
  if (!have_header) throw FormatError("CSV input has no header line");
  return records;
}

KeyedRecords read_records(std::istream& in, FileFormat format) {
  return format == FileFormat::json ? read_json(in) : read_csv(in);
}

template <class Tag>
KeyedRecords to_records(const KeyedValues<Tag>& values) {
  KeyedRecords records;
  records.n = values.dimension();
  records.N = values.density();
  for (const auto& [key, value] : values.values()) records.entries.emplace_back(key, value);
  return records;
}

template <class Tag>
KeyedValues<Tag> from_records(const KeyedRecords& records, std::optional<int> density) {
  if (records.N && density && *records.N != *density) {
    throw FormatError("file declares N=" + std::to_string(*records.N) + " but N=" +
                      std::to_string(*density) + " was requested");
  }
  const auto N = records.N ? records.N : density;
  if (!N) throw FormatError("grid density N is not given by the file; pass --N");
  KeyedValues<Tag> out(records.n, *N);
  std::set<std::vector<int>> seen;
  for (const auto& [key, value] : records.entries) {
    if (static_cast<int>(key.size()) != records.n) {
      throw FormatError("key length differs from n=" + std::to_string(records.n));
    }
    if (!seen.insert(key).second) {
      std::string text;
      for (int v : key) text += (text.empty() ? "" : ",") + std::to_string(v);
      throw FormatError("duplicate key (" + text + ")");
    }
    out.set(key, value);
  }
  return out;
}

template KeyedRecords to_records(const KeyedValues<SampleTag>&);
template KeyedRecords to_records(const KeyedValues<CoefficientTag>&);
template KeyedValues<SampleTag> from_records(const KeyedRecords&, std::optional<int>);
template KeyedValues<CoefficientTag> from_records(const KeyedRecords&, std::optional<int>);

void write_json(std::ostream& out, const KeyedRecords& records) {
  json doc;
  doc["n"] = records.n;
  if (records.N) doc["N"] = *records.N;
  doc["entries"] = json::array();
  for (const auto& [key, value] : records.entries) {
    doc["entries"].push_back({{"key", key}, {"re", value.real()}, {"im", value.imag()}});
  }
  out << doc.dump(1) << '\n';
}

void write_csv(std::ostream& out, const KeyedRecords& records) {
  for (int i = 0; i < records.n; ++i) out << "key_" << i + 1 << ',';
  out << "re,im\n";
  for (const auto& [key, value] : records.entries) {
    for (int v : key) out << v << ',';
    out << format_double(value.real()) << ',' << format_double(value.imag()) << '\n';
  }
}

void write_records(std::ostream& out, const KeyedRecords& records, FileFormat format) {
  if (format == FileFormat::json) {
    write_json(out, records);
  } else {
    write_csv(out, records);
  }
}

}  // namespace altexp
