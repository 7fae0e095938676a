// Copyright 2026 The LinkQ Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linkq/clock.h"

#include <cstdio>
#include <stdexcept>
#include <thread>

namespace linkq {

Clock::time_point SystemClock::Now() const {
  return std::chrono::system_clock::now();
}

void SystemClock::SleepFor(duration d) {
  if (d > duration::zero()) std::this_thread::sleep_for(d);
}

Clock& SystemClock::Instance() {
  static SystemClock clock;
  return clock;
}

Clock::time_point ManualClock::Now() const {
  std::lock_guard<std::mutex> lock(mu_);
  return now_;
}

void ManualClock::SleepFor(duration d) {
  if (d > duration::zero()) Advance(d);
}

void ManualClock::Advance(duration d) {
  std::lock_guard<std::mutex> lock(mu_);
  now_ += d;
}

namespace {

std::chrono::year_month_day ToDate(Clock::time_point t) {
  return std::chrono::year_month_day(
      std::chrono::floor<std::chrono::days>(t));
}

}  // namespace

std::string FormatDate(Clock::time_point t) {
  auto ymd = ToDate(t);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

std::string FormatTimestamp(Clock::time_point t) {
  auto day = std::chrono::floor<std::chrono::days>(t);
  std::chrono::hh_mm_ss hms(
      std::chrono::floor<std::chrono::seconds>(t - day));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02dZ", FormatDate(t).c_str(),
                int(hms.hours().count()), int(hms.minutes().count()),
                int(hms.seconds().count()));
  return buf;
}

Clock::time_point ParseDate(const std::string& date) {
  int y = 0;
  unsigned m = 0, d = 0;
  if (std::sscanf(date.c_str(), "%d-%u-%u", &y, &m, &d) != 3) {
    throw std::invalid_argument("bad date: " + date);
  }
  std::chrono::year_month_day ymd{std::chrono::year(y), std::chrono::month(m),
                                  std::chrono::day(d)};
  if (!ymd.ok()) throw std::invalid_argument("bad date: " + date);
  return std::chrono::sys_days(ymd);
}

}  // namespace linkq
