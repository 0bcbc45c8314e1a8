#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace citenet {

// applnID. Values in real data exceed 32 bits only in principle, so keep 64.
using PatentId = std::int64_t;

// Calendar date with day precision, stored as days since 1970-01-01.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}

  static std::optional<Date> from_ymd(int year, unsigned month, unsigned day);

  // Accepts exactly `YYYY-MM-DD`; anything else (including impossible dates
  // like 2001-02-30) yields nullopt.
  static std::optional<Date> parse_iso(std::string_view text);

  std::string iso() const;

  constexpr std::int64_t day_number() const { return days_.time_since_epoch().count(); }
  constexpr Date plus_days(std::int64_t n) const {
    return Date(days_ + std::chrono::days(n));
  }

  constexpr auto operator<=>(const Date&) const = default;

 private:
  std::chrono::sys_days days_{};
};

}  // namespace citenet
