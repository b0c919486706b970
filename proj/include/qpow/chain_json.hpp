// Copyright 2026 The qpow Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file chain_json.hpp
 * Chain file format: one JSON array of blocks with fields index, timestamp,
 * prev_hash, payload, nonce, n_qubits, pow_hash.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chain.hpp"

namespace qpow {

/// The file exists but does not hold a well-formed chain document.
class ChainFormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void to_json(nlohmann::json &j, const Block &b) {
    j = nlohmann::json{{"index", b.index},
                       {"timestamp", b.timestamp},
                       {"prev_hash", b.prev_hash.hex()},
                       {"payload", b.payload},
                       {"nonce", b.nonce},
                       {"n_qubits", b.n_qubits},
                       {"pow_hash", b.pow_hash.hex()}};
}

inline void from_json(const nlohmann::json &j, Block &b) {
    j.at("index").get_to(b.index);
    j.at("timestamp").get_to(b.timestamp);
    b.prev_hash = Digest256::from_hex(j.at("prev_hash").get<std::string>());
    j.at("payload").get_to(b.payload);
    j.at("nonce").get_to(b.nonce);
    j.at("n_qubits").get_to(b.n_qubits);
    b.pow_hash = Digest256::from_hex(j.at("pow_hash").get<std::string>());
}

[[nodiscard]] inline std::string chain_to_json(const std::vector<Block> &chain) {
    return nlohmann::json(chain).dump(2) + "\n";
}

[[nodiscard]] inline std::vector<Block> chain_from_json(const std::string &text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_array()) {
            throw ChainFormatError("chain document must be a JSON array");
        }
        for (const auto &item : j) {
            if (!item.is_object()) {
                throw ChainFormatError("chain entries must be objects");
            }
            if (!item.contains("timestamp") ||
                !item["timestamp"].is_number_integer()) {
                throw ChainFormatError("field 'timestamp' must be an integer");
            }
            for (const char *key : {"index", "nonce", "n_qubits"}) {
                if (!item.contains(key) || !item[key].is_number_unsigned()) {
                    throw ChainFormatError(std::string("field '") + key +
                                           "' must be a non-negative integer");
                }
            }
            if (item["nonce"].get<std::uint64_t>() >
                std::numeric_limits<std::uint32_t>::max()) {
                throw ChainFormatError("field 'nonce' exceeds 32 bits");
            }
        }
        return j.get<std::vector<Block>>();
    } catch (const nlohmann::json::exception &e) {
        throw ChainFormatError(std::string("malformed chain JSON: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ChainFormatError(std::string("malformed chain JSON: ") + e.what());
    }
}

/// Throws std::ios_base::failure if the file cannot be opened.
[[nodiscard]] inline std::vector<Block>
read_chain(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open chain file " + path.string());
    }
    const std::string text{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    return chain_from_json(text);
}

inline void write_chain(const std::filesystem::path &path,
                        const std::vector<Block> &chain) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::ios_base::failure("cannot write chain file " + path.string());
    }
    out << chain_to_json(chain);
}

} // namespace qpow
