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

#ifndef LINKQ_CLOCK_H_
#define LINKQ_CLOCK_H_

#include <chrono>
#include <mutex>
#include <string>

namespace linkq {

// Wall-clock source with an injectable sleep, so rate limiting, retry
// backoff and timestamps can be driven by a fake in tests.
class Clock {
 public:
  using time_point = std::chrono::system_clock::time_point;
  using duration = std::chrono::system_clock::duration;

  virtual ~Clock() = default;
  virtual time_point Now() const = 0;
  virtual void SleepFor(duration d) = 0;
};

class SystemClock final : public Clock {
 public:
  time_point Now() const override;
  void SleepFor(duration d) override;

  static Clock& Instance();
};

// Clock that only moves when told to. SleepFor advances time instantly.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(time_point start = time_point{}) : now_(start) {}

  time_point Now() const override;
  void SleepFor(duration d) override;
  void Advance(duration d);

 private:
  mutable std::mutex mu_;
  time_point now_;
};

// "YYYY-MM-DD" in UTC.
std::string FormatDate(Clock::time_point t);
// ISO-8601 UTC with second precision, e.g. "2024-05-01T12:00:00Z".
std::string FormatTimestamp(Clock::time_point t);
// Parses "YYYY-MM-DD" as midnight UTC.
Clock::time_point ParseDate(const std::string& date);

}  // namespace linkq

#endif  // LINKQ_CLOCK_H_
