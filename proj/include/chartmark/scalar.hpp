#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace chartmark {

/// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

/// Inverse of days_from_civil.
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

/// Parses "YYYY-MM" or "YYYY-MM-DD" (month/day range-checked) to epoch days.
/// "YYYY-MM" is normalized to the first day of the month.
std::optional<std::int64_t> parse_iso_date(const std::string& text);

/// A chart data value: a number, a calendar date, or a category label.
///
/// Temporal values keep both the original ISO text (so documents round-trip
/// unchanged) and the epoch-day number used for every comparison and fit.
class Scalar {
public:
    enum class Kind { number, temporal, category };

    Scalar() : kind_(Kind::number), num_(0.0) {}

    static Scalar number(double v) {
        Scalar s;
        s.kind_ = Kind::number;
        s.num_ = v;
        return s;
    }

    static Scalar category(std::string text) {
        Scalar s;
        s.kind_ = Kind::category;
        s.text_ = std::move(text);
        return s;
    }

    /// nullopt when the text is not a valid ISO date.
    static std::optional<Scalar> temporal(const std::string& iso);

    /// Temporal value from a (possibly fractional) epoch-day count; the ISO
    /// text is synthesized from the floor of the day count.
    static Scalar temporal_days(double days);

    /// Classifies a string: valid ISO date -> temporal, anything else -> category.
    static Scalar from_text(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_number() const { return kind_ == Kind::number; }
    bool is_temporal() const { return kind_ == Kind::temporal; }
    bool is_category() const { return kind_ == Kind::category; }

    double number_value() const { return num_; }
    double epoch_days() const { return num_; }

    /// Raw text for temporal (original ISO form) and category values.
    const std::string& text() const { return text_; }

    /// Numeric axis position: the number itself, or epoch days for temporal.
    /// Only meaningful for number/temporal kinds.
    double numeric() const { return num_; }

    bool operator==(const Scalar& other) const {
        if (kind_ != other.kind_) return false;
        if (kind_ == Kind::category) return text_ == other.text_;
        return num_ == other.num_;
    }
    bool operator!=(const Scalar& other) const { return !(*this == other); }

private:
    Kind kind_;
    double num_ = 0.0;   // number value or epoch days
    std::string text_;   // raw ISO text or category label
};

} // namespace chartmark
