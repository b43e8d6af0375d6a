#pragma once

#include <string_view>

// Asset files compiled into the library (see cmake/EmbedAssets.cmake).
namespace oracle_forge::assets {

std::string_view promptTemplate();
std::string_view fewShotBank();

}  // namespace oracle_forge::assets
