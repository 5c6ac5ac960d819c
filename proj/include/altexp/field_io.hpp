#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altexp/finite_transform.hpp"

namespace altexp {

enum class FileFormat { json, csv };

/// "json" or "csv". Throws FormatError otherwise.
FileFormat parse_format(std::string_view name);
/// Format implied by a file extension, if any.
std::optional<FileFormat> format_from_path(std::string_view path);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Untyped contents of a sample or coefficient file.
struct KeyedRecords {
  int n = 0;
  std::optional<int> N;  // CSV files do not carry N
  std::vector<std::pair<std::vector<int>, Complex>> entries;
};

/// {"n": n, "N": N, "entries": [{"key": [...], "re": ..., "im": ...}, ...]}
KeyedRecords read_json(std::istream& in);
/// Header key_1,...,key_n,re,im then one row per entry. Errors carry the
/// 1-based line number.
KeyedRecords read_csv(std::istream& in);
KeyedRecords read_records(std::istream& in, FileFormat format);

template <class Tag>
KeyedRecords to_records(const KeyedValues<Tag>& values);

/// Builds a typed map, with N taken from the file or `density` (which must
/// agree when both are present). Throws FormatError on duplicate keys,
/// wrong key lengths, or a missing N.
template <class Tag>
KeyedValues<Tag> from_records(const KeyedRecords& records, std::optional<int> density);

void write_json(std::ostream& out, const KeyedRecords& records);
void write_csv(std::ostream& out, const KeyedRecords& records);
void write_records(std::ostream& out, const KeyedRecords& records, FileFormat format);

}  // namespace altexp
