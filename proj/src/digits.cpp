#include <algorithm>
#include <charconv>
#include <sstream>

#include "midy/common.hpp"

namespace midy {

std::string format_digits(const Digits& digits) {
    const bool small = std::all_of(digits.begin(), digits.end(), [](Digit d) { return d <= 9; });
    std::string out;
    if (small) {
        for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
        return out;
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(digits[i]);
    }
    // A lone large digit keeps a trailing comma so it cannot be read as ASCII digits.
    if (digits.size() == 1) out.push_back(',');
    return out;
}

Digits parse_digits(const std::string& text) {
    Digits out;
    if (text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') fail(ErrorKind::invalid_input, "bad digit character in '" + text + "'");
            out.push_back(static_cast<Digit>(ch - '0'));
        }
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Digit d = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
            fail(ErrorKind::invalid_input, "bad digit '" + item + "' in '" + text + "'");
        out.push_back(d);
    }
    return out;
}

}  // namespace midy
