#pragma once

#include "richspaces/Geometry.hpp"
#include "richspaces/Image.hpp"
#include "richspaces/Random.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace richspaces {

// Finite state machine whose emitted bits feed back as its own input,
// bootstrapped with a single bit. Emissions are non-empty, so the feedback
// queue can never starve.
struct SdaTransition {
    int next = 0;
    std::string emit; // characters '0'/'1'
};

struct SdaState {
    SdaTransition on[2]; // indexed by the consumed input bit
};

struct SelfDrivingAutomaton {
    int initialState = 0;
    int bootstrapBit = 0;
    std::vector<SdaState> states;

    void validate() const;
};

// First n bits of the automaton's output stream.
std::string generateBits(const SelfDrivingAutomaton& sda, std::size_t n);

// Lazy cursor over the infinite output stream. Owns its automaton, so it
// outlives whatever it was constructed from.
class BitStream {
public:
    explicit BitStream(SelfDrivingAutomaton sda);

    int nextBit();
    // k bits, most significant first. k in [1, 32].
    std::uint32_t nextInt(int k);
    std::uint64_t consumed() const { return consumed_; }

private:
    SelfDrivingAutomaton sda_;
    int state_;
    std::string queue_; // bootstrap bit plus every emitted bit
    std::size_t head_ = 0;
    std::uint64_t consumed_ = 0;
};

SelfDrivingAutomaton randomSda(int stateCount, int maxEmitLength, Rng& rng);

SelfDrivingAutomaton parseSda(std::istream& in);
std::string formatSda(const SelfDrivingAutomaton& sda);

struct Room {
    int x = 0, y = 0; // top-left cell
    int w = 1, h = 1;
    int failures = 0; // failed adjacent placements

    bool overlaps(const Room& other) const {
        return x < other.x + other.w && other.x < x + w && y < other.y + other.h &&
               other.y < y + h;
    }
    bool contains(int cx, int cy) const {
        return cx >= x && cx < x + w && cy >= y && cy < y + h;
    }
};

// Straight 1-cell corridor joining a room to its target.
struct Corridor {
    int x = 0, y = 0;
};

struct RoomLayout {
    int width = 0, height = 0;
    std::vector<Room> rooms; // rooms[0] is the seed room
    std::vector<Corridor> corridors;
    PathNetwork network;
};

struct LayoutParams {
    int minRoomW = 3, maxRoomW = 10;
    int minRoomH = 3, maxRoomH = 10;
    int failureLimit = 8; // rooms at or past this are never targeted again
};

struct SelectionEvent {
    int roomIndex = 0;
    int failuresAtSelection = 0;
    bool accepted = false;
};

// Serial do-what's-possible placement: proposals that fit are applied, the
// rest only bump the target's failure count. All decisions come from the
// automaton's bit stream, so identical inputs give identical layouts.
RoomLayout layoutRooms(const SelfDrivingAutomaton& sda, const PathNetwork& network, int budget,
                       const LayoutParams& params = {},
                       std::vector<SelectionEvent>* trace = nullptr);

// Rooms grey, corridors blue, seed room red, network light grey on white.
Image renderLayout(const RoomLayout& layout);

void writeLayoutFile(const RoomLayout& layout, const std::string& path);
RoomLayout readLayoutFile(const std::string& path);

} // namespace richspaces
