#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include <sys/stat.h>

#include "oracle_forge/doc_model.hpp"
#include "oracle_forge/text.hpp"

namespace testsupport {

namespace fs = std::filesystem;

inline fs::path sourceDir() { return fs::path(ORACLE_FORGE_SOURCE_DIR); }
inline fs::path dataDir() { return sourceDir() / "data"; }
inline fs::path goldenDir() { return sourceDir() / "tests" / "golden"; }

inline std::string slurp(const fs::path& p) { return oracle_forge::text::readFile(p.string()); }

inline void spit(const fs::path& p, std::string_view content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
}

/// Fresh directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "oracle-forge-test-XXXXXX").string();
        path_ = mkdtemp(tmpl.data());
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    fs::path path_;
};

/// Writes an executable /bin/sh script.
inline fs::path writeScript(const fs::path& p, std::string_view body) {
    spit(p, "#!/bin/sh\n" + std::string(body));
    fs::permissions(p, fs::perms::owner_all | fs::perms::group_read | fs::perms::group_exec);
    return p;
}

/// Every regular file under `root`, keyed by relative path.
inline std::map<std::string, std::string> snapshotTree(const fs::path& root) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = slurp(e.path());
    }
    return out;
}

inline oracle_forge::ClassDoc loadFixtureDoc(const std::string& fqcn) {
    for (const char* ext : {".java", ".json"}) {
        const fs::path p = dataDir() / "docs" / (fqcn + ext);
        if (fs::exists(p)) {
            const std::string src = slurp(p);
            return oracle_forge::parseClassDoc(src, oracle_forge::detectFormat(p.string(), src), p.string());
        }
    }
    throw std::runtime_error("no fixture doc for " + fqcn);
}

}  // namespace testsupport
