#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "laea/errors.hpp"

namespace laea::harness {

/// Opens files strictly under one output directory and remembers what was
/// written, for the manifest.
class OutputDir {
public:
    explicit OutputDir(std::string root) : root_(std::move(root)) {
        std::filesystem::create_directories(root_);
    }

    std::ofstream open(const std::string& relative_path) {
        const std::filesystem::path full =
            std::filesystem::path(root_) / relative_path;
        std::filesystem::create_directories(full.parent_path());
        std::ofstream out(full);
        if (!out) throw InvalidState("cannot open for writing: " + full.string());
        files_.push_back(relative_path);
        return out;
    }

    std::filesystem::path path(const std::string& relative_path) const {
        return std::filesystem::path(root_) / relative_path;
    }

    const std::string& root() const { return root_; }
    const std::vector<std::string>& files() const { return files_; }

private:
    std::string root_;
    std::vector<std::string> files_;
};

}  // namespace laea::harness
