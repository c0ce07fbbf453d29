#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sentifiers {

using CsvRecord = std::vector<std::string>;

// RFC 4180 reader: quoted fields may contain commas, CR/LF and doubled quotes.
// Lines that are entirely empty are skipped. Every record must have as many
// fields as the header. Throws IngestError with the 1-based record number.
std::vector<CsvRecord> parse_csv(std::string_view text);

}  // namespace sentifiers
