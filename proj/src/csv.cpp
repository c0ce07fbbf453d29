#include "sentifiers/csv.hpp"

#include "sentifiers/errors.hpp"

namespace sentifiers {

std::vector<CsvRecord> parse_csv(std::string_view text) {
  // Tolerate a UTF-8 byte order mark.
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool line_has_content = false;
  std::size_t record_no = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    if (line_has_content) {
      end_field();
      if (!records.empty() && record.size() != records.front().size()) {
        throw IngestError(record_no, "expected " + std::to_string(records.front().size()) +
                                         " fields, found " + std::to_string(record.size()));
      }
      records.push_back(std::move(record));
      ++record_no;
    }
    record.clear();
    field.clear();
    field_was_quoted = false;
    line_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw IngestError(record_no, "unexpected quote inside an unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        line_has_content = true;
        break;
      case ',':
        line_has_content = true;
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        if (field_was_quoted) {
          throw IngestError(record_no, "characters after a closing quote");
        }
        field.push_back(c);
        line_has_content = true;
    }
  }
  if (in_quotes) throw IngestError(record_no, "unterminated quoted field");
  end_record();
  return records;
}

}  // namespace sentifiers
