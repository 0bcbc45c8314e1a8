#include "citenet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "citenet/error.hpp"

namespace citenet {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<PatentId> parse_id(std::string_view field) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  if (!std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  PatentId value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

// Reads '\n'-terminated lines, dropping a trailing '\r'. Line numbers are 1-based.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) {
      if (in_.bad()) throw IoError("read failure after line " + std::to_string(number_));
      return false;
    }
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

struct PairHash {
  std::size_t operator()(const CitationRecord& r) const noexcept {
    const auto a = static_cast<std::uint64_t>(r.citing);
    const auto b = static_cast<std::uint64_t>(r.cited);
    return std::hash<std::uint64_t>{}(a * 0x9e3779b97f4a7c15ULL ^ (b + 0x632be59bd9b4e019ULL));
  }
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<std::size_t> find_column(const std::vector<std::string_view>& header,
                                       std::initializer_list<std::string_view> names) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto h = lower(trim(header[i]));
    for (auto n : names)
      if (h == n) return i;
  }
  return std::nullopt;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

}  // namespace

Encoding parse_encoding(std::string_view name) {
  const auto n = lower(name);
  if (n == "latin-1" || n == "latin1" || n == "iso-8859-1") return Encoding::Latin1;
  if (n == "utf-8" || n == "utf8") return Encoding::Utf8;
  throw UsageError("unsupported encoding '" + std::string(name) + "' (expected latin-1 or utf-8)");
}

std::string decode_text(std::string_view bytes, Encoding encoding) {
  if (encoding == Encoding::Utf8) return std::string(bytes);
  std::string out;
  out.reserve(bytes.size());
  for (const char ch : bytes) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 0x80) {
      out.push_back(ch);
    } else {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::string encode_text(std::string_view utf8, Encoding encoding) {
  if (encoding == Encoding::Utf8) return std::string(utf8);
  std::string out;
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size(); ++i) {
    const auto c = static_cast<unsigned char>(utf8[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if ((c == 0xC2 || c == 0xC3) && i + 1 < utf8.size()) {
      const auto c2 = static_cast<unsigned char>(utf8[++i]);
      out.push_back(static_cast<char>(((c & 0x03) << 6) | (c2 & 0x3F)));
    } else {
      throw ValidationError("text has no latin-1 representation");
    }
  }
  return out;
}

CitationParse parse_citations(std::istream& source, const CitationParseOptions& options) {
  CitationParse result;
  auto& diag = result.diagnostics;
  std::unordered_set<CitationRecord, PairHash> seen;
  LineReader reader(source);
  std::string line;
  bool first = true;

  auto reject = [&](const std::string& reason) {
    ++diag.rows_rejected;
    if (options.strict)
      throw ValidationError("line " + std::to_string(reader.number()) + ": " + reason);
  };

  while (reader.next(line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_tabs(line);
    if (first) {
      first = false;
      if (!parse_id(fields[0])) {
        diag.header_skipped = true;
        continue;
      }
    }
    ++diag.rows_read;
    if (fields.size() < 2) {
      reject("expected 2 tab-separated fields");
      continue;
    }
    const auto citing = parse_id(fields[0]);
    const auto cited = parse_id(fields[1]);
    if (!citing || !cited) {
      reject("non-numeric patent id");
      continue;
    }
    if (*citing == *cited) {
      ++diag.self_citations;
      reject("self-citation of " + std::to_string(*citing));
      continue;
    }
    const CitationRecord rec{*citing, *cited};
    if (!seen.insert(rec).second) ++diag.duplicate_edges;
    result.records.push_back(rec);
  }
  return result;
}

CitationParse parse_citations_file(const std::string& path, const CitationParseOptions& options) {
  auto in = open_or_throw(path);
  try {
    return parse_citations(in, options);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

MetadataParse parse_metadata(std::istream& source, const MetadataParseOptions& options) {
  MetadataParse result;
  auto& diag = result.diagnostics;
  LineReader reader(source);
  std::string line;
  bool first = true;
  MetadataColumns cols = options.columns;

  struct Seen {
    std::size_t index;
    std::size_t line;
  };
  std::unordered_map<PatentId, Seen> by_id;

  auto reject = [&](const std::string& reason) {
    ++diag.rows_rejected;
    if (options.strict)
      throw ValidationError("line " + std::to_string(reader.number()) + ": " + reason);
  };

  while (reader.next(line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_tabs(line);
    if (first) {
      first = false;
      const std::size_t probe = cols.id.value_or(0);
      if (probe >= fields.size() || !parse_id(fields[probe])) {
        diag.header_skipped = true;
        if (!cols.id) cols.id = find_column(fields, {"applnid", "appln_id", "id"});
        if (!cols.company) cols.company = find_column(fields, {"appmyname", "company"});
        if (!cols.filing_date)
          cols.filing_date =
              find_column(fields, {"filingdate", "filing_date", "appln_filing_date", "date"});
        if (!cols.id) throw ValidationError("metadata header has no patent id column");
        continue;
      }
      if (!cols.id && !cols.company && !cols.filing_date) cols = {0, 1, 2};
      if (!cols.id) cols.id = 0;
    }
    ++diag.rows_read;

    const auto id_field = *cols.id < fields.size() ? std::optional(fields[*cols.id]) : std::nullopt;
    const auto id = id_field ? parse_id(*id_field) : std::nullopt;
    if (!id) {
      reject("missing or non-numeric patent id");
      continue;
    }

    PatentMetadata rec{*id, std::nullopt, std::nullopt};
    if (cols.company && *cols.company < fields.size()) {
      const auto name = trim(fields[*cols.company]);
      if (!name.empty()) rec.company = decode_text(name, options.encoding);
    }
    if (cols.filing_date && *cols.filing_date < fields.size()) {
      const auto text = trim(fields[*cols.filing_date]);
      if (!text.empty()) {
        rec.filing_date = Date::parse_iso(text);
        if (!rec.filing_date) ++diag.unparseable_dates;
      }
    }

    if (const auto it = by_id.find(rec.id); it != by_id.end()) {
      if (result.records[it->second.index] != rec)
        throw ValidationError("patent " + std::to_string(rec.id) +
                              " has conflicting metadata on lines " +
                              std::to_string(it->second.line) + " and " +
                              std::to_string(reader.number()));
      ++diag.duplicate_ids;
      continue;
    }
    by_id.emplace(rec.id, Seen{result.records.size(), reader.number()});
    if (rec.company) ++diag.patents_with_company;
    result.records.push_back(std::move(rec));
  }
  return result;
}

MetadataParse parse_metadata_file(const std::string& path, const MetadataParseOptions& options) {
  auto in = open_or_throw(path);
  try {
    return parse_metadata(in, options);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_citations(std::ostream& out, const std::vector<CitationRecord>& records, Encoding) {
  out << "citing\tcited\n";
  for (const auto& r : records) out << r.citing << '\t' << r.cited << '\n';
}

void write_metadata(std::ostream& out, const std::vector<PatentMetadata>& records,
                    Encoding encoding) {
  out << "applnID\tappMyName\tfilingDate\n";
  for (const auto& r : records) {
    out << r.id << '\t';
    if (r.company) out << encode_text(*r.company, encoding);
    out << '\t';
    if (r.filing_date) out << r.filing_date->iso();
    out << '\n';
  }
}

}  // namespace citenet
