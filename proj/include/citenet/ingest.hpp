#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citenet/types.hpp"

namespace citenet {

struct CitationRecord {
  PatentId citing = 0;
  PatentId cited = 0;

  friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

struct PatentMetadata {
  PatentId id = 0;
  std::optional<std::string> company;  // UTF-8, trimmed, never empty
  std::optional<Date> filing_date;

  friend bool operator==(const PatentMetadata&, const PatentMetadata&) = default;
};

struct IngestDiagnostics {
  std::size_t rows_read = 0;  // data rows, header excluded
  std::size_t rows_rejected = 0;
  std::size_t self_citations = 0;
  std::size_t duplicate_edges = 0;
  std::size_t patents_with_company = 0;
  std::size_t unparseable_dates = 0;
  std::size_t duplicate_ids = 0;  // identical repeats folded into one record
  bool header_skipped = false;
};

enum class Encoding { Latin1, Utf8 };

Encoding parse_encoding(std::string_view name);

// Latin-1 bytes to UTF-8. Utf8 passes through unchanged.
std::string decode_text(std::string_view bytes, Encoding encoding);
// Inverse of decode_text; code points above U+00FF have no Latin-1 form and
// raise ValidationError.
std::string encode_text(std::string_view utf8, Encoding encoding);

struct CitationParseOptions {
  Encoding encoding = Encoding::Latin1;
  bool strict = false;
};

struct CitationParse {
  std::vector<CitationRecord> records;
  IngestDiagnostics diagnostics;
};

CitationParse parse_citations(std::istream& source, const CitationParseOptions& options = {});
CitationParse parse_citations_file(const std::string& path, const CitationParseOptions& options = {});

// 0-based column indices; unset entries are resolved from the header line, or
// fall back to (0, 1, 2) when the file has no header.
struct MetadataColumns {
  std::optional<std::size_t> id;
  std::optional<std::size_t> company;
  std::optional<std::size_t> filing_date;
};

struct MetadataParseOptions {
  Encoding encoding = Encoding::Latin1;
  bool strict = false;
  MetadataColumns columns;
};

struct MetadataParse {
  std::vector<PatentMetadata> records;
  IngestDiagnostics diagnostics;
};

MetadataParse parse_metadata(std::istream& source, const MetadataParseOptions& options = {});
MetadataParse parse_metadata_file(const std::string& path, const MetadataParseOptions& options = {});

// Writers emit a header line and the same framing the parsers accept.
void write_citations(std::ostream& out, const std::vector<CitationRecord>& records,
                     Encoding encoding = Encoding::Latin1);
void write_metadata(std::ostream& out, const std::vector<PatentMetadata>& records,
                    Encoding encoding = Encoding::Latin1);

}  // namespace citenet
