#pragma once

// Unicode character classes consumed by the international tokenizer:
// general categories P (punctuation), N (number), S (symbol) plus the
// whitespace set used for splitting. Frozen table, Unicode 16.0;
// regenerated by tests/data/generate_oracle_data.py --unicode-table.

#include <algorithm>
#include <cstdint>

namespace vat::detail {

enum class CharClass : std::uint8_t {
  kOther = 0,
  kPunctuation = 1,
  kNumber = 2,
  kSymbol = 3,
  kWhitespace = 4,
};

struct CharRange {
  char32_t lo;
  char32_t hi;
  CharClass cls;
};

inline constexpr CharRange kCharClassTable[] = {
    {0x9, 0xD, CharClass::kWhitespace},
    {0x1C, 0x20, CharClass::kWhitespace},
    {0x21, 0x23, CharClass::kPunctuation},
    {0x24, 0x24, CharClass::kSymbol},
    {0x25, 0x2A, CharClass::kPunctuation},
    {0x2B, 0x2B, CharClass::kSymbol},
    {0x2C, 0x2F, CharClass::kPunctuation},
    {0x30, 0x39, CharClass::kNumber},
    {0x3A, 0x3B, CharClass::kPunctuation},
    {0x3C, 0x3E, CharClass::kSymbol},
    {0x3F, 0x40, CharClass::kPunctuation},
    {0x5B, 0x5D, CharClass::kPunctuation},
    {0x5E, 0x5E, CharClass::kSymbol},
    {0x5F, 0x5F, CharClass::kPunctuation},
    {0x60, 0x60, CharClass::kSymbol},
    {0x7B, 0x7B, CharClass::kPunctuation},
    {0x7C, 0x7C, CharClass::kSymbol},
    {0x7D, 0x7D, CharClass::kPunctuation},
    {0x7E, 0x7E, CharClass::kSymbol},
    {0x85, 0x85, CharClass::kWhitespace},
    {0xA0, 0xA0, CharClass::kWhitespace},
    {0xA1, 0xA1, CharClass::kPunctuation},
    {0xA2, 0xA6, CharClass::kSymbol},
    {0xA7, 0xA7, CharClass::kPunctuation},
    {0xA8, 0xA9, CharClass::kSymbol},
    {0xAB, 0xAB, CharClass::kPunctuation},
    {0xAC, 0xAC, CharClass::kSymbol},
    {0xAE, 0xB1, CharClass::kSymbol},
    {0xB2, 0xB3, CharClass::kNumber},
    {0xB4, 0xB4, CharClass::kSymbol},
    {0xB6, 0xB7, CharClass::kPunctuation},
    {0xB8, 0xB8, CharClass::kSymbol},
    {0xB9, 0xB9, CharClass::kNumber},
    {0xBB, 0xBB, CharClass::kPunctuation},
    {0xBC, 0xBE, CharClass::kNumber},
    {0xBF, 0xBF, CharClass::kPunctuation},
    {0xD7, 0xD7, CharClass::kSymbol},
    {0xF7, 0xF7, CharClass::kSymbol},
    {0x2C2, 0x2C5, CharClass::kSymbol},
    {0x2D2, 0x2DF, CharClass::kSymbol},
    {0x2E5, 0x2EB, CharClass::kSymbol},
    {0x2ED, 0x2ED, CharClass::kSymbol},
    {0x2EF, 0x2FF, CharClass::kSymbol},
    {0x375, 0x375, CharClass::kSymbol},
    {0x37E, 0x37E, CharClass::kPunctuation},
    {0x384, 0x385, CharClass::kSymbol},
    {0x387, 0x387, CharClass::kPunctuation},
    {0x3F6, 0x3F6, CharClass::kSymbol},
    {0x482, 0x482, CharClass::kSymbol},
    {0x55A, 0x55F, CharClass::kPunctuation},
    {0x589, 0x58A, CharClass::kPunctuation},
    {0x58D, 0x58F, CharClass::kSymbol},
    {0x5BE, 0x5BE, CharClass::kPunctuation},
    {0x5C0, 0x5C0, CharClass::kPunctuation},
    {0x5C3, 0x5C3, CharClass::kPunctuation},
    {0x5C6, 0x5C6, CharClass::kPunctuation},
    {0x5F3, 0x5F4, CharClass::kPunctuation},
    {0x606, 0x608, CharClass::kSymbol},
    {0x609, 0x60A, CharClass::kPunctuation},
    {0x60B, 0x60B, CharClass::kSymbol},
    {0x60C, 0x60D, CharClass::kPunctuation},
    {0x60E, 0x60F, CharClass::kSymbol},
    {0x61B, 0x61B, CharClass::kPunctuation},
    {0x61D, 0x61F, CharClass::kPunctuation},
    {0x660, 0x669, CharClass::kNumber},
    {0x66A, 0x66D, CharClass::kPunctuation},
    {0x6D4, 0x6D4, CharClass::kPunctuation},
    {0x6DE, 0x6DE, CharClass::kSymbol},
    {0x6E9, 0x6E9, CharClass::kSymbol},
    {0x6F0, 0x6F9, CharClass::kNumber},
    {0x6FD, 0x6FE, CharClass::kSymbol},
    {0x700, 0x70D, CharClass::kPunctuation},
    {0x7C0, 0x7C9, CharClass::kNumber},
    {0x7F6, 0x7F6, CharClass::kSymbol},
    {0x7F7, 0x7F9, CharClass::kPunctuation},
    {0x7FE, 0x7FF, CharClass::kSymbol},
    {0x830, 0x83E, CharClass::kPunctuation},
    {0x85E, 0x85E, CharClass::kPunctuation},
    {0x888, 0x888, CharClass::kSymbol},
    {0x964, 0x965, CharClass::kPunctuation},
    {0x966, 0x96F, CharClass::kNumber},
    {0x970, 0x970, CharClass::kPunctuation},
    {0x9E6, 0x9EF, CharClass::kNumber},
    {0x9F2, 0x9F3, CharClass::kSymbol},
    {0x9F4, 0x9F9, CharClass::kNumber},
    {0x9FA, 0x9FB, CharClass::kSymbol},
    {0x9FD, 0x9FD, CharClass::kPunctuation},
    {0xA66, 0xA6F, CharClass::kNumber},
    {0xA76, 0xA76, CharClass::kPunctuation},
    {0xAE6, 0xAEF, CharClass::kNumber},
    {0xAF0, 0xAF0, CharClass::kPunctuation},
    {0xAF1, 0xAF1, CharClass::kSymbol},
    {0xB66, 0xB6F, CharClass::kNumber},
    {0xB70, 0xB70, CharClass::kSymbol},
    {0xB72, 0xB77, CharClass::kNumber},
    {0xBE6, 0xBF2, CharClass::kNumber},
    {0xBF3, 0xBFA, CharClass::kSymbol},
    {0xC66, 0xC6F, CharClass::kNumber},
    {0xC77, 0xC77, CharClass::kPunctuation},
    {0xC78, 0xC7E, CharClass::kNumber},
    {0xC7F, 0xC7F, CharClass::kSymbol},
    {0xC84, 0xC84, CharClass::kPunctuation},
    {0xCE6, 0xCEF, CharClass::kNumber},
    {0xD4F, 0xD4F, CharClass::kSymbol},
    {0xD58, 0xD5E, CharClass::kNumber},
    {0xD66, 0xD78, CharClass::kNumber},
    {0xD79, 0xD79, CharClass::kSymbol},
    {0xDE6, 0xDEF, CharClass::kNumber},
    {0xDF4, 0xDF4, CharClass::kPunctuation},
    {0xE3F, 0xE3F, CharClass::kSymbol},
    {0xE4F, 0xE4F, CharClass::kPunctuation},
    {0xE50, 0xE59, CharClass::kNumber},
    {0xE5A, 0xE5B, CharClass::kPunctuation},
    {0xED0, 0xED9, CharClass::kNumber},
    {0xF01, 0xF03, CharClass::kSymbol},
    {0xF04, 0xF12, CharClass::kPunctuation},
    {0xF13, 0xF13, CharClass::kSymbol},
    {0xF14, 0xF14, CharClass::kPunctuation},
    {0xF15, 0xF17, CharClass::kSymbol},
    {0xF1A, 0xF1F, CharClass::kSymbol},
    {0xF20, 0xF33, CharClass::kNumber},
    {0xF34, 0xF34, CharClass::kSymbol},
    {0xF36, 0xF36, CharClass::kSymbol},
    {0xF38, 0xF38, CharClass::kSymbol},
    {0xF3A, 0xF3D, CharClass::kPunctuation},
    {0xF85, 0xF85, CharClass::kPunctuation},
    {0xFBE, 0xFC5, CharClass::kSymbol},
    {0xFC7, 0xFCC, CharClass::kSymbol},
    {0xFCE, 0xFCF, CharClass::kSymbol},
    {0xFD0, 0xFD4, CharClass::kPunctuation},
    {0xFD5, 0xFD8, CharClass::kSymbol},
    {0xFD9, 0xFDA, CharClass::kPunctuation},
    {0x1040, 0x1049, CharClass::kNumber},
    {0x104A, 0x104F, CharClass::kPunctuation},
    {0x1090, 0x1099, CharClass::kNumber},
    {0x109E, 0x109F, CharClass::kSymbol},
    {0x10FB, 0x10FB, CharClass::kPunctuation},
    {0x1360, 0x1368, CharClass::kPunctuation},
    {0x1369, 0x137C, CharClass::kNumber},
    {0x1390, 0x1399, CharClass::kSymbol},
    {0x1400, 0x1400, CharClass::kPunctuation},
    {0x166D, 0x166D, CharClass::kSymbol},
    {0x166E, 0x166E, CharClass::kPunctuation},
    {0x1680, 0x1680, CharClass::kWhitespace},
    {0x169B, 0x169C, CharClass::kPunctuation},
    {0x16EB, 0x16ED, CharClass::kPunctuation},
    {0x16EE, 0x16F0, CharClass::kNumber},
    {0x1735, 0x1736, CharClass::kPunctuation},
    {0x17D4, 0x17D6, CharClass::kPunctuation},
    {0x17D8, 0x17DA, CharClass::kPunctuation},
    {0x17DB, 0x17DB, CharClass::kSymbol},
    {0x17E0, 0x17E9, CharClass::kNumber},
    {0x17F0, 0x17F9, CharClass::kNumber},
    {0x1800, 0x180A, CharClass::kPunctuation},
    {0x1810, 0x1819, CharClass::kNumber},
    {0x1940, 0x1940, CharClass::kSymbol},
    {0x1944, 0x1945, CharClass::kPunctuation},
    {0x1946, 0x194F, CharClass::kNumber},
    {0x19D0, 0x19DA, CharClass::kNumber},
    {0x19DE, 0x19FF, CharClass::kSymbol},
    {0x1A1E, 0x1A1F, CharClass::kPunctuation},
    {0x1A80, 0x1A89, CharClass::kNumber},
    {0x1A90, 0x1A99, CharClass::kNumber},
    {0x1AA0, 0x1AA6, CharClass::kPunctuation},
    {0x1AA8, 0x1AAD, CharClass::kPunctuation},
    {0x1B4E, 0x1B4F, CharClass::kPunctuation},
    {0x1B50, 0x1B59, CharClass::kNumber},
    {0x1B5A, 0x1B60, CharClass::kPunctuation},
    {0x1B61, 0x1B6A, CharClass::kSymbol},
    {0x1B74, 0x1B7C, CharClass::kSymbol},
    {0x1B7D, 0x1B7F, CharClass::kPunctuation},
    {0x1BB0, 0x1BB9, CharClass::kNumber},
    {0x1BFC, 0x1BFF, CharClass::kPunctuation},
    {0x1C3B, 0x1C3F, CharClass::kPunctuation},
    {0x1C40, 0x1C49, CharClass::kNumber},
    {0x1C50, 0x1C59, CharClass::kNumber},
    {0x1C7E, 0x1C7F, CharClass::kPunctuation},
    {0x1CC0, 0x1CC7, CharClass::kPunctuation},
    {0x1CD3, 0x1CD3, CharClass::kPunctuation},
    {0x1FBD, 0x1FBD, CharClass::kSymbol},
    {0x1FBF, 0x1FC1, CharClass::kSymbol},
    {0x1FCD, 0x1FCF, CharClass::kSymbol},
    {0x1FDD, 0x1FDF, CharClass::kSymbol},
    {0x1FED, 0x1FEF, CharClass::kSymbol},
    {0x1FFD, 0x1FFE, CharClass::kSymbol},
    {0x2000, 0x200A, CharClass::kWhitespace},
    {0x2010, 0x2027, CharClass::kPunctuation},
    {0x2028, 0x2029, CharClass::kWhitespace},
    {0x202F, 0x202F, CharClass::kWhitespace},
    {0x2030, 0x2043, CharClass::kPunctuation},
    {0x2044, 0x2044, CharClass::kSymbol},
    {0x2045, 0x2051, CharClass::kPunctuation},
    {0x2052, 0x2052, CharClass::kSymbol},
    {0x2053, 0x205E, CharClass::kPunctuation},
    {0x205F, 0x205F, CharClass::kWhitespace},
    {0x2070, 0x2070, CharClass::kNumber},
    {0x2074, 0x2079, CharClass::kNumber},
    {0x207A, 0x207C, CharClass::kSymbol},
    {0x207D, 0x207E, CharClass::kPunctuation},
    {0x2080, 0x2089, CharClass::kNumber},
    {0x208A, 0x208C, CharClass::kSymbol},
    {0x208D, 0x208E, CharClass::kPunctuation},
    {0x20A0, 0x20C1, CharClass::kSymbol},
    {0x2100, 0x2101, CharClass::kSymbol},
    {0x2103, 0x2106, CharClass::kSymbol},
    {0x2108, 0x2109, CharClass::kSymbol},
    {0x2114, 0x2114, CharClass::kSymbol},
    {0x2116, 0x2118, CharClass::kSymbol},
    {0x211E, 0x2123, CharClass::kSymbol},
    {0x2125, 0x2125, CharClass::kSymbol},
    {0x2127, 0x2127, CharClass::kSymbol},
    {0x2129, 0x2129, CharClass::kSymbol},
    {0x212E, 0x212E, CharClass::kSymbol},
    {0x213A, 0x213B, CharClass::kSymbol},
    {0x2140, 0x2144, CharClass::kSymbol},
    {0x214A, 0x214D, CharClass::kSymbol},
    {0x214F, 0x214F, CharClass::kSymbol},
    {0x2150, 0x2182, CharClass::kNumber},
    {0x2185, 0x2189, CharClass::kNumber},
    {0x218A, 0x218B, CharClass::kSymbol},
    {0x2190, 0x2307, CharClass::kSymbol},
    {0x2308, 0x230B, CharClass::kPunctuation},
    {0x230C, 0x2328, CharClass::kSymbol},
    {0x2329, 0x232A, CharClass::kPunctuation},
    {0x232B, 0x2429, CharClass::kSymbol},
    {0x2440, 0x244A, CharClass::kSymbol},
    {0x2460, 0x249B, CharClass::kNumber},
    {0x249C, 0x24E9, CharClass::kSymbol},
    {0x24EA, 0x24FF, CharClass::kNumber},
    {0x2500, 0x2767, CharClass::kSymbol},
    {0x2768, 0x2775, CharClass::kPunctuation},
    {0x2776, 0x2793, CharClass::kNumber},
    {0x2794, 0x27C4, CharClass::kSymbol},
    {0x27C5, 0x27C6, CharClass::kPunctuation},
    {0x27C7, 0x27E5, CharClass::kSymbol},
    {0x27E6, 0x27EF, CharClass::kPunctuation},
    {0x27F0, 0x2982, CharClass::kSymbol},
    {0x2983, 0x2998, CharClass::kPunctuation},
    {0x2999, 0x29D7, CharClass::kSymbol},
    {0x29D8, 0x29DB, CharClass::kPunctuation},
    {0x29DC, 0x29FB, CharClass::kSymbol},
    {0x29FC, 0x29FD, CharClass::kPunctuation},
    {0x29FE, 0x2B73, CharClass::kSymbol},
    {0x2B76, 0x2BFF, CharClass::kSymbol},
    {0x2CE5, 0x2CEA, CharClass::kSymbol},
    {0x2CF9, 0x2CFC, CharClass::kPunctuation},
    {0x2CFD, 0x2CFD, CharClass::kNumber},
    {0x2CFE, 0x2CFF, CharClass::kPunctuation},
    {0x2D70, 0x2D70, CharClass::kPunctuation},
    {0x2E00, 0x2E2E, CharClass::kPunctuation},
    {0x2E30, 0x2E4F, CharClass::kPunctuation},
    {0x2E50, 0x2E51, CharClass::kSymbol},
    {0x2E52, 0x2E5D, CharClass::kPunctuation},
    {0x2E80, 0x2E99, CharClass::kSymbol},
    {0x2E9B, 0x2EF3, CharClass::kSymbol},
    {0x2F00, 0x2FD5, CharClass::kSymbol},
    {0x2FF0, 0x2FFF, CharClass::kSymbol},
    {0x3000, 0x3000, CharClass::kWhitespace},
    {0x3001, 0x3003, CharClass::kPunctuation},
    {0x3004, 0x3004, CharClass::kSymbol},
    {0x3007, 0x3007, CharClass::kNumber},
    {0x3008, 0x3011, CharClass::kPunctuation},
    {0x3012, 0x3013, CharClass::kSymbol},
    {0x3014, 0x301F, CharClass::kPunctuation},
    {0x3020, 0x3020, CharClass::kSymbol},
    {0x3021, 0x3029, CharClass::kNumber},
    {0x3030, 0x3030, CharClass::kPunctuation},
    {0x3036, 0x3037, CharClass::kSymbol},
    {0x3038, 0x303A, CharClass::kNumber},
    {0x303D, 0x303D, CharClass::kPunctuation},
    {0x303E, 0x303F, CharClass::kSymbol},
    {0x309B, 0x309C, CharClass::kSymbol},
    {0x30A0, 0x30A0, CharClass::kPunctuation},
    {0x30FB, 0x30FB, CharClass::kPunctuation},
    {0x3190, 0x3191, CharClass::kSymbol},
    {0x3192, 0x3195, CharClass::kNumber},
    {0x3196, 0x319F, CharClass::kSymbol},
    {0x31C0, 0x31E5, CharClass::kSymbol},
    {0x31EF, 0x31EF, CharClass::kSymbol},
    {0x3200, 0x321E, CharClass::kSymbol},
    {0x3220, 0x3229, CharClass::kNumber},
    {0x322A, 0x3247, CharClass::kSymbol},
    {0x3248, 0x324F, CharClass::kNumber},
    {0x3250, 0x3250, CharClass::kSymbol},
    {0x3251, 0x325F, CharClass::kNumber},
    {0x3260, 0x327F, CharClass::kSymbol},
    {0x3280, 0x3289, CharClass::kNumber},
    {0x328A, 0x32B0, CharClass::kSymbol},
    {0x32B1, 0x32BF, CharClass::kNumber},
    {0x32C0, 0x33FF, CharClass::kSymbol},
    {0x4DC0, 0x4DFF, CharClass::kSymbol},
    {0xA490, 0xA4C6, CharClass::kSymbol},
    {0xA4FE, 0xA4FF, CharClass::kPunctuation},
    {0xA60D, 0xA60F, CharClass::kPunctuation},
    {0xA620, 0xA629, CharClass::kNumber},
    {0xA673, 0xA673, CharClass::kPunctuation},
    {0xA67E, 0xA67E, CharClass::kPunctuation},
    {0xA6E6, 0xA6EF, CharClass::kNumber},
    {0xA6F2, 0xA6F7, CharClass::kPunctuation},
    {0xA700, 0xA716, CharClass::kSymbol},
    {0xA720, 0xA721, CharClass::kSymbol},
    {0xA789, 0xA78A, CharClass::kSymbol},
    {0xA828, 0xA82B, CharClass::kSymbol},
    {0xA830, 0xA835, CharClass::kNumber},
    {0xA836, 0xA839, CharClass::kSymbol},
    {0xA874, 0xA877, CharClass::kPunctuation},
    {0xA8CE, 0xA8CF, CharClass::kPunctuation},
    {0xA8D0, 0xA8D9, CharClass::kNumber},
    {0xA8F8, 0xA8FA, CharClass::kPunctuation},
    {0xA8FC, 0xA8FC, CharClass::kPunctuation},
    {0xA900, 0xA909, CharClass::kNumber},
    {0xA92E, 0xA92F, CharClass::kPunctuation},
    {0xA95F, 0xA95F, CharClass::kPunctuation},
    {0xA9C1, 0xA9CD, CharClass::kPunctuation},
    {0xA9D0, 0xA9D9, CharClass::kNumber},
    {0xA9DE, 0xA9DF, CharClass::kPunctuation},
    {0xA9F0, 0xA9F9, CharClass::kNumber},
    {0xAA50, 0xAA59, CharClass::kNumber},
    {0xAA5C, 0xAA5F, CharClass::kPunctuation},
    {0xAA77, 0xAA79, CharClass::kSymbol},
    {0xAADE, 0xAADF, CharClass::kPunctuation},
    {0xAAF0, 0xAAF1, CharClass::kPunctuation},
    {0xAB5B, 0xAB5B, CharClass::kSymbol},
    {0xAB6A, 0xAB6B, CharClass::kSymbol},
    {0xABEB, 0xABEB, CharClass::kPunctuation},
    {0xABF0, 0xABF9, CharClass::kNumber},
    {0xFB29, 0xFB29, CharClass::kSymbol},
    {0xFBB2, 0xFBD2, CharClass::kSymbol},
    {0xFD3E, 0xFD3F, CharClass::kPunctuation},
    {0xFD40, 0xFD4F, CharClass::kSymbol},
    {0xFD90, 0xFD91, CharClass::kSymbol},
    {0xFDC8, 0xFDCF, CharClass::kSymbol},
    {0xFDFC, 0xFDFF, CharClass::kSymbol},
    {0xFE10, 0xFE19, CharClass::kPunctuation},
    {0xFE30, 0xFE52, CharClass::kPunctuation},
    {0xFE54, 0xFE61, CharClass::kPunctuation},
    {0xFE62, 0xFE62, CharClass::kSymbol},
    {0xFE63, 0xFE63, CharClass::kPunctuation},
    {0xFE64, 0xFE66, CharClass::kSymbol},
    {0xFE68, 0xFE68, CharClass::kPunctuation},
    {0xFE69, 0xFE69, CharClass::kSymbol},
    {0xFE6A, 0xFE6B, CharClass::kPunctuation},
    {0xFF01, 0xFF03, CharClass::kPunctuation},
    {0xFF04, 0xFF04, CharClass::kSymbol},
    {0xFF05, 0xFF0A, CharClass::kPunctuation},
    {0xFF0B, 0xFF0B, CharClass::kSymbol},
    {0xFF0C, 0xFF0F, CharClass::kPunctuation},
    {0xFF10, 0xFF19, CharClass::kNumber},
    {0xFF1A, 0xFF1B, CharClass::kPunctuation},
    {0xFF1C, 0xFF1E, CharClass::kSymbol},
    {0xFF1F, 0xFF20, CharClass::kPunctuation},
    {0xFF3B, 0xFF3D, CharClass::kPunctuation},
    {0xFF3E, 0xFF3E, CharClass::kSymbol},
    {0xFF3F, 0xFF3F, CharClass::kPunctuation},
    {0xFF40, 0xFF40, CharClass::kSymbol},
    {0xFF5B, 0xFF5B, CharClass::kPunctuation},
    {0xFF5C, 0xFF5C, CharClass::kSymbol},
    {0xFF5D, 0xFF5D, CharClass::kPunctuation},
    {0xFF5E, 0xFF5E, CharClass::kSymbol},
    {0xFF5F, 0xFF65, CharClass::kPunctuation},
    {0xFFE0, 0xFFE6, CharClass::kSymbol},
    {0xFFE8, 0xFFEE, CharClass::kSymbol},
    {0xFFFC, 0xFFFD, CharClass::kSymbol},
    {0x10100, 0x10102, CharClass::kPunctuation},
    {0x10107, 0x10133, CharClass::kNumber},
    {0x10137, 0x1013F, CharClass::kSymbol},
    {0x10140, 0x10178, CharClass::kNumber},
    {0x10179, 0x10189, CharClass::kSymbol},
    {0x1018A, 0x1018B, CharClass::kNumber},
    {0x1018C, 0x1018E, CharClass::kSymbol},
    {0x10190, 0x1019C, CharClass::kSymbol},
    {0x101A0, 0x101A0, CharClass::kSymbol},
    {0x101D0, 0x101FC, CharClass::kSymbol},
    {0x102E1, 0x102FB, CharClass::kNumber},
    {0x10320, 0x10323, CharClass::kNumber},
    {0x10341, 0x10341, CharClass::kNumber},
    {0x1034A, 0x1034A, CharClass::kNumber},
    {0x1039F, 0x1039F, CharClass::kPunctuation},
    {0x103D0, 0x103D0, CharClass::kPunctuation},
    {0x103D1, 0x103D5, CharClass::kNumber},
    {0x104A0, 0x104A9, CharClass::kNumber},
    {0x1056F, 0x1056F, CharClass::kPunctuation},
    {0x10857, 0x10857, CharClass::kPunctuation},
    {0x10858, 0x1085F, CharClass::kNumber},
    {0x10877, 0x10878, CharClass::kSymbol},
    {0x10879, 0x1087F, CharClass::kNumber},
    {0x108A7, 0x108AF, CharClass::kNumber},
    {0x108FB, 0x108FF, CharClass::kNumber},
    {0x10916, 0x1091B, CharClass::kNumber},
    {0x1091F, 0x1091F, CharClass::kPunctuation},
    {0x1093F, 0x1093F, CharClass::kPunctuation},
    {0x109BC, 0x109BD, CharClass::kNumber},
    {0x109C0, 0x109CF, CharClass::kNumber},
    {0x109D2, 0x109FF, CharClass::kNumber},
    {0x10A40, 0x10A48, CharClass::kNumber},
    {0x10A50, 0x10A58, CharClass::kPunctuation},
    {0x10A7D, 0x10A7E, CharClass::kNumber},
    {0x10A7F, 0x10A7F, CharClass::kPunctuation},
    {0x10A9D, 0x10A9F, CharClass::kNumber},
    {0x10AC8, 0x10AC8, CharClass::kSymbol},
    {0x10AEB, 0x10AEF, CharClass::kNumber},
    {0x10AF0, 0x10AF6, CharClass::kPunctuation},
    {0x10B39, 0x10B3F, CharClass::kPunctuation},
    {0x10B58, 0x10B5F, CharClass::kNumber},
    {0x10B78, 0x10B7F, CharClass::kNumber},
    {0x10B99, 0x10B9C, CharClass::kPunctuation},
    {0x10BA9, 0x10BAF, CharClass::kNumber},
    {0x10CFA, 0x10CFF, CharClass::kNumber},
    {0x10D30, 0x10D39, CharClass::kNumber},
    {0x10D40, 0x10D49, CharClass::kNumber},
    {0x10D6E, 0x10D6E, CharClass::kPunctuation},
    {0x10D8E, 0x10D8F, CharClass::kSymbol},
    {0x10E60, 0x10E7E, CharClass::kNumber},
    {0x10EAD, 0x10EAD, CharClass::kPunctuation},
    {0x10ED0, 0x10ED0, CharClass::kPunctuation},
    {0x10ED1, 0x10ED8, CharClass::kSymbol},
    {0x10F1D, 0x10F26, CharClass::kNumber},
    {0x10F51, 0x10F54, CharClass::kNumber},
    {0x10F55, 0x10F59, CharClass::kPunctuation},
    {0x10F86, 0x10F89, CharClass::kPunctuation},
    {0x10FC5, 0x10FCB, CharClass::kNumber},
    {0x11047, 0x1104D, CharClass::kPunctuation},
    {0x11052, 0x1106F, CharClass::kNumber},
    {0x110BB, 0x110BC, CharClass::kPunctuation},
    {0x110BE, 0x110C1, CharClass::kPunctuation},
    {0x110F0, 0x110F9, CharClass::kNumber},
    {0x11136, 0x1113F, CharClass::kNumber},
    {0x11140, 0x11143, CharClass::kPunctuation},
    {0x11174, 0x11175, CharClass::kPunctuation},
    {0x111C5, 0x111C8, CharClass::kPunctuation},
    {0x111CD, 0x111CD, CharClass::kPunctuation},
    {0x111D0, 0x111D9, CharClass::kNumber},
    {0x111DB, 0x111DB, CharClass::kPunctuation},
    {0x111DD, 0x111DF, CharClass::kPunctuation},
    {0x111E1, 0x111F4, CharClass::kNumber},
    {0x11238, 0x1123D, CharClass::kPunctuation},
    {0x112A9, 0x112A9, CharClass::kPunctuation},
    {0x112F0, 0x112F9, CharClass::kNumber},
    {0x113D4, 0x113D5, CharClass::kPunctuation},
    {0x113D7, 0x113D8, CharClass::kPunctuation},
    {0x1144B, 0x1144F, CharClass::kPunctuation},
    {0x11450, 0x11459, CharClass::kNumber},
    {0x1145A, 0x1145B, CharClass::kPunctuation},
    {0x1145D, 0x1145D, CharClass::kPunctuation},
    {0x114C6, 0x114C6, CharClass::kPunctuation},
    {0x114D0, 0x114D9, CharClass::kNumber},
    {0x115C1, 0x115D7, CharClass::kPunctuation},
    {0x11641, 0x11643, CharClass::kPunctuation},
    {0x11650, 0x11659, CharClass::kNumber},
    {0x11660, 0x1166C, CharClass::kPunctuation},
    {0x116B9, 0x116B9, CharClass::kPunctuation},
    {0x116C0, 0x116C9, CharClass::kNumber},
    {0x116D0, 0x116E3, CharClass::kNumber},
    {0x11730, 0x1173B, CharClass::kNumber},
    {0x1173C, 0x1173E, CharClass::kPunctuation},
    {0x1173F, 0x1173F, CharClass::kSymbol},
    {0x1183B, 0x1183B, CharClass::kPunctuation},
    {0x118E0, 0x118F2, CharClass::kNumber},
    {0x11944, 0x11946, CharClass::kPunctuation},
    {0x11950, 0x11959, CharClass::kNumber},
    {0x119E2, 0x119E2, CharClass::kPunctuation},
    {0x11A3F, 0x11A46, CharClass::kPunctuation},
    {0x11A9A, 0x11A9C, CharClass::kPunctuation},
    {0x11A9E, 0x11AA2, CharClass::kPunctuation},
    {0x11B00, 0x11B09, CharClass::kPunctuation},
    {0x11BE1, 0x11BE1, CharClass::kPunctuation},
    {0x11BF0, 0x11BF9, CharClass::kNumber},
    {0x11C41, 0x11C45, CharClass::kPunctuation},
    {0x11C50, 0x11C6C, CharClass::kNumber},
    {0x11C70, 0x11C71, CharClass::kPunctuation},
    {0x11D50, 0x11D59, CharClass::kNumber},
    {0x11DA0, 0x11DA9, CharClass::kNumber},
    {0x11DE0, 0x11DE9, CharClass::kNumber},
    {0x11EF7, 0x11EF8, CharClass::kPunctuation},
    {0x11F43, 0x11F4F, CharClass::kPunctuation},
    {0x11F50, 0x11F59, CharClass::kNumber},
    {0x11FC0, 0x11FD4, CharClass::kNumber},
    {0x11FD5, 0x11FF1, CharClass::kSymbol},
    {0x11FFF, 0x11FFF, CharClass::kPunctuation},
    {0x12400, 0x1246E, CharClass::kNumber},
    {0x12470, 0x12474, CharClass::kPunctuation},
    {0x12FF1, 0x12FF2, CharClass::kPunctuation},
    {0x16130, 0x16139, CharClass::kNumber},
    {0x16A60, 0x16A69, CharClass::kNumber},
    {0x16A6E, 0x16A6F, CharClass::kPunctuation},
    {0x16AC0, 0x16AC9, CharClass::kNumber},
    {0x16AF5, 0x16AF5, CharClass::kPunctuation},
    {0x16B37, 0x16B3B, CharClass::kPunctuation},
    {0x16B3C, 0x16B3F, CharClass::kSymbol},
    {0x16B44, 0x16B44, CharClass::kPunctuation},
    {0x16B45, 0x16B45, CharClass::kSymbol},
    {0x16B50, 0x16B59, CharClass::kNumber},
    {0x16B5B, 0x16B61, CharClass::kNumber},
    {0x16D6D, 0x16D6F, CharClass::kPunctuation},
    {0x16D70, 0x16D79, CharClass::kNumber},
    {0x16E80, 0x16E96, CharClass::kNumber},
    {0x16E97, 0x16E9A, CharClass::kPunctuation},
    {0x16FE2, 0x16FE2, CharClass::kPunctuation},
    {0x16FF4, 0x16FF6, CharClass::kNumber},
    {0x1BC9C, 0x1BC9C, CharClass::kSymbol},
    {0x1BC9F, 0x1BC9F, CharClass::kPunctuation},
    {0x1CC00, 0x1CCEF, CharClass::kSymbol},
    {0x1CCF0, 0x1CCF9, CharClass::kNumber},
    {0x1CCFA, 0x1CCFC, CharClass::kSymbol},
    {0x1CD00, 0x1CEB3, CharClass::kSymbol},
    {0x1CEBA, 0x1CED0, CharClass::kSymbol},
    {0x1CEE0, 0x1CEF0, CharClass::kSymbol},
    {0x1CF50, 0x1CFC3, CharClass::kSymbol},
    {0x1D000, 0x1D0F5, CharClass::kSymbol},
    {0x1D100, 0x1D126, CharClass::kSymbol},
    {0x1D129, 0x1D164, CharClass::kSymbol},
    {0x1D16A, 0x1D16C, CharClass::kSymbol},
    {0x1D183, 0x1D184, CharClass::kSymbol},
    {0x1D18C, 0x1D1A9, CharClass::kSymbol},
    {0x1D1AE, 0x1D1EA, CharClass::kSymbol},
    {0x1D200, 0x1D241, CharClass::kSymbol},
    {0x1D245, 0x1D245, CharClass::kSymbol},
    {0x1D2C0, 0x1D2D3, CharClass::kNumber},
    {0x1D2E0, 0x1D2F3, CharClass::kNumber},
    {0x1D300, 0x1D356, CharClass::kSymbol},
    {0x1D360, 0x1D378, CharClass::kNumber},
    {0x1D6C1, 0x1D6C1, CharClass::kSymbol},
    {0x1D6DB, 0x1D6DB, CharClass::kSymbol},
    {0x1D6FB, 0x1D6FB, CharClass::kSymbol},
    {0x1D715, 0x1D715, CharClass::kSymbol},
    {0x1D735, 0x1D735, CharClass::kSymbol},
    {0x1D74F, 0x1D74F, CharClass::kSymbol},
    {0x1D76F, 0x1D76F, CharClass::kSymbol},
    {0x1D789, 0x1D789, CharClass::kSymbol},
    {0x1D7A9, 0x1D7A9, CharClass::kSymbol},
    {0x1D7C3, 0x1D7C3, CharClass::kSymbol},
    {0x1D7CE, 0x1D7FF, CharClass::kNumber},
    {0x1D800, 0x1D9FF, CharClass::kSymbol},
    {0x1DA37, 0x1DA3A, CharClass::kSymbol},
    {0x1DA6D, 0x1DA74, CharClass::kSymbol},
    {0x1DA76, 0x1DA83, CharClass::kSymbol},
    {0x1DA85, 0x1DA86, CharClass::kSymbol},
    {0x1DA87, 0x1DA8B, CharClass::kPunctuation},
    {0x1E140, 0x1E149, CharClass::kNumber},
    {0x1E14F, 0x1E14F, CharClass::kSymbol},
    {0x1E2F0, 0x1E2F9, CharClass::kNumber},
    {0x1E2FF, 0x1E2FF, CharClass::kSymbol},
    {0x1E4F0, 0x1E4F9, CharClass::kNumber},
    {0x1E5F1, 0x1E5FA, CharClass::kNumber},
    {0x1E5FF, 0x1E5FF, CharClass::kPunctuation},
    {0x1E8C7, 0x1E8CF, CharClass::kNumber},
    {0x1E950, 0x1E959, CharClass::kNumber},
    {0x1E95E, 0x1E95F, CharClass::kPunctuation},
    {0x1EC71, 0x1ECAB, CharClass::kNumber},
    {0x1ECAC, 0x1ECAC, CharClass::kSymbol},
    {0x1ECAD, 0x1ECAF, CharClass::kNumber},
    {0x1ECB0, 0x1ECB0, CharClass::kSymbol},
    {0x1ECB1, 0x1ECB4, CharClass::kNumber},
    {0x1ED01, 0x1ED2D, CharClass::kNumber},
    {0x1ED2E, 0x1ED2E, CharClass::kSymbol},
    {0x1ED2F, 0x1ED3D, CharClass::kNumber},
    {0x1EEF0, 0x1EEF1, CharClass::kSymbol},
    {0x1F000, 0x1F02B, CharClass::kSymbol},
    {0x1F030, 0x1F093, CharClass::kSymbol},
    {0x1F0A0, 0x1F0AE, CharClass::kSymbol},
    {0x1F0B1, 0x1F0BF, CharClass::kSymbol},
    {0x1F0C1, 0x1F0CF, CharClass::kSymbol},
    {0x1F0D1, 0x1F0F5, CharClass::kSymbol},
    {0x1F100, 0x1F10C, CharClass::kNumber},
    {0x1F10D, 0x1F1AD, CharClass::kSymbol},
    {0x1F1E6, 0x1F202, CharClass::kSymbol},
    {0x1F210, 0x1F23B, CharClass::kSymbol},
    {0x1F240, 0x1F248, CharClass::kSymbol},
    {0x1F250, 0x1F251, CharClass::kSymbol},
    {0x1F260, 0x1F265, CharClass::kSymbol},
    {0x1F300, 0x1F6D8, CharClass::kSymbol},
    {0x1F6DC, 0x1F6EC, CharClass::kSymbol},
    {0x1F6F0, 0x1F6FC, CharClass::kSymbol},
    {0x1F700, 0x1F7D9, CharClass::kSymbol},
    {0x1F7E0, 0x1F7EB, CharClass::kSymbol},
    {0x1F7F0, 0x1F7F0, CharClass::kSymbol},
    {0x1F800, 0x1F80B, CharClass::kSymbol},
    {0x1F810, 0x1F847, CharClass::kSymbol},
    {0x1F850, 0x1F859, CharClass::kSymbol},
    {0x1F860, 0x1F887, CharClass::kSymbol},
    {0x1F890, 0x1F8AD, CharClass::kSymbol},
    {0x1F8B0, 0x1F8BB, CharClass::kSymbol},
    {0x1F8C0, 0x1F8C1, CharClass::kSymbol},
    {0x1F8D0, 0x1F8D8, CharClass::kSymbol},
    {0x1F900, 0x1FA57, CharClass::kSymbol},
    {0x1FA60, 0x1FA6D, CharClass::kSymbol},
    {0x1FA70, 0x1FA7C, CharClass::kSymbol},
    {0x1FA80, 0x1FA8A, CharClass::kSymbol},
    {0x1FA8E, 0x1FAC6, CharClass::kSymbol},
    {0x1FAC8, 0x1FAC8, CharClass::kSymbol},
    {0x1FACD, 0x1FADC, CharClass::kSymbol},
    {0x1FADF, 0x1FAEA, CharClass::kSymbol},
    {0x1FAEF, 0x1FAF8, CharClass::kSymbol},
    {0x1FB00, 0x1FB92, CharClass::kSymbol},
    {0x1FB94, 0x1FBEF, CharClass::kSymbol},
    {0x1FBF0, 0x1FBF9, CharClass::kNumber},
    {0x1FBFA, 0x1FBFA, CharClass::kSymbol},
};

inline CharClass char_class(char32_t cp) {
  const auto* end = std::end(kCharClassTable);
  const auto* it = std::upper_bound(
      std::begin(kCharClassTable), end, cp,
      [](char32_t v, const CharRange& r) { return v < r.lo; });
  if (it == std::begin(kCharClassTable)) return CharClass::kOther;
  --it;
  return cp <= it->hi ? it->cls : CharClass::kOther;
}

inline bool is_punctuation(char32_t cp) { return char_class(cp) == CharClass::kPunctuation; }
inline bool is_number(char32_t cp) { return char_class(cp) == CharClass::kNumber; }
inline bool is_symbol(char32_t cp) { return char_class(cp) == CharClass::kSymbol; }
inline bool is_whitespace(char32_t cp) { return char_class(cp) == CharClass::kWhitespace; }

}  // namespace vat::detail
