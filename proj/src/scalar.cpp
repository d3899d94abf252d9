#include "chartmark/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace chartmark {

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp < 10 ? mp + 3 : mp - 9;
    year = static_cast<int>(y + (month <= 2));
}

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

unsigned days_in_month(int y, unsigned m) {
    static const unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

std::optional<std::int64_t> parse_iso_date(const std::string& text) {
    // YYYY-MM or YYYY-MM-DD
    if (text.size() != 7 && text.size() != 10) return std::nullopt;
    if (text[4] != '-') return std::nullopt;
    if (text.size() == 10 && text[7] != '-') return std::nullopt;
    if (!all_digits(text, 0, 4) || !all_digits(text, 5, 7)) return std::nullopt;
    if (text.size() == 10 && !all_digits(text, 8, 10)) return std::nullopt;

    const int year = std::stoi(text.substr(0, 4));
    const unsigned month = static_cast<unsigned>(std::stoi(text.substr(5, 2)));
    if (month < 1 || month > 12) return std::nullopt;
    unsigned day = 1;
    if (text.size() == 10) {
        day = static_cast<unsigned>(std::stoi(text.substr(8, 2)));
        if (day < 1 || day > days_in_month(year, month)) return std::nullopt;
    }
    return days_from_civil(year, month, day);
}

std::optional<Scalar> Scalar::temporal(const std::string& iso) {
    auto days = parse_iso_date(iso);
    if (!days) return std::nullopt;
    Scalar s;
    s.kind_ = Kind::temporal;
    s.num_ = static_cast<double>(*days);
    s.text_ = iso;
    return s;
}

Scalar Scalar::temporal_days(double days) {
    Scalar s;
    s.kind_ = Kind::temporal;
    s.num_ = days;
    int y;
    unsigned m, d;
    civil_from_days(static_cast<std::int64_t>(std::floor(days)), y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", y, m, d);
    s.text_ = buf;
    return s;
}

Scalar Scalar::from_text(const std::string& text) {
    if (auto t = temporal(text)) return *t;
    return category(text);
}

} // namespace chartmark
