#ifndef TOPPKIT_PROFILE_IO_H_
#define TOPPKIT_PROFILE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "toppkit/speed_profile.h"

namespace toppkit {

// CSV with header "s,h", one row per grid point, 17 significant digits so
// that parsing the text recovers every double exactly.
std::string ProfileToCsv(const SpeedProfile& profile);
SpeedProfile ProfileFromCsv(std::string_view text,
                            Provenance provenance = Provenance::kSynthetic);

// {"grid": [...], "values": [...], "provenance": "..."} plus "seed" when set.
nlohmann::json ProfileToJson(const SpeedProfile& profile);
SpeedProfile ProfileFromJson(const nlohmann::json& j);

// Formats a double with 17 significant digits.
std::string FormatDouble(double value);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace toppkit

#endif  // TOPPKIT_PROFILE_IO_H_
