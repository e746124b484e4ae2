#pragma once

#include <string>
#include <string_view>

#include "ssg/game.hpp"

namespace ssg {

/// Reads the "ssg 1" text format. Vertex lines may come in any order but
/// ids must end up dense. Errors are ParseError with the offending line.
Game parse_game(std::string_view text);

/// Writes vertices in id order with reduced "num/den" sink values.
std::string serialize_game(const Game& game);

Game read_game_file(const std::string& path);
void write_game_file(const std::string& path, const Game& game);

}  // namespace ssg
