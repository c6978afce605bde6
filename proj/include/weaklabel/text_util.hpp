#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weaklabel {

// Number of code points in a UTF-8 string; malformed bytes count as one each.
int utf8_length(const std::string& s);

// Decodes to code points. Malformed bytes are kept as their byte value.
std::vector<uint32_t> utf8_decode(const std::string& s);

std::string utf8_encode(const std::vector<uint32_t>& cps);

// Simple (one-to-one) case folding covering ASCII, Latin-1, Latin Extended-A,
// basic Greek and Cyrillic. Multi-character folds are not applied.
std::string casefold(const std::string& s);

}  // namespace weaklabel
