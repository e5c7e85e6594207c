#include "richspaces/Dwp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace richspaces {

void SelfDrivingAutomaton::validate() const {
    if (states.empty()) throw std::invalid_argument("SDA needs at least one state");
    const int n = static_cast<int>(states.size());
    if (initialState < 0 || initialState >= n)
        throw std::invalid_argument("SDA initial state out of range");
    if (bootstrapBit != 0 && bootstrapBit != 1)
        throw std::invalid_argument("SDA bootstrap bit must be 0 or 1");
    for (const SdaState& s : states) {
        for (int b = 0; b < 2; ++b) {
            const SdaTransition& t = s.on[b];
            if (t.next < 0 || t.next >= n) throw std::invalid_argument("SDA next state out of range");
            if (t.emit.empty()) throw std::invalid_argument("SDA emission must be non-empty");
            for (char c : t.emit)
                if (c != '0' && c != '1') throw std::invalid_argument("SDA emission must be bits");
        }
    }
}

BitStream::BitStream(SelfDrivingAutomaton sda)
    : sda_(std::move(sda)), state_(sda_.initialState) {
    sda_.validate();
    queue_.push_back(static_cast<char>('0' + sda_.bootstrapBit));
}

int BitStream::nextBit() {
    // queue_ is the input sequence: bootstrap bit followed by every emitted
    // bit. The output stream is queue_ without the bootstrap, so output bit k
    // lives at queue_[k + 1]. Emissions are non-empty, so each machine step
    // grows the queue by at least one bit and the input cursor never starves.
    while (queue_.size() < consumed_ + 2) {
        const int inputBit = queue_[head_] - '0';
        ++head_;
        const SdaTransition& t = sda_.states[state_].on[inputBit];
        queue_.append(t.emit);
        state_ = t.next;
    }
    const int bit = queue_[consumed_ + 1] - '0';
    ++consumed_;
    return bit;
}

std::uint32_t BitStream::nextInt(int k) {
    if (k < 1 || k > 32) throw std::invalid_argument("bit-group size must be in [1, 32]");
    std::uint32_t v = 0;
    for (int i = 0; i < k; ++i) v = (v << 1) | static_cast<std::uint32_t>(nextBit());
    return v;
}

std::string generateBits(const SelfDrivingAutomaton& sda, std::size_t n) {
    sda.validate();
    std::string out;
    out.reserve(n);
    // Seed the feedback queue with the bootstrap bit only; every transition's
    // emission is appended to both the output and the back of the queue.
    std::string queue(1, static_cast<char>('0' + sda.bootstrapBit));
    std::size_t head = 0;
    int state = sda.initialState;
    while (out.size() < n) {
        const int bit = queue[head++] - '0';
        const SdaTransition& t = sda.states[state].on[bit];
        out.append(t.emit);
        queue.append(t.emit);
        state = t.next;
        if (head > 4096 && head * 2 > queue.size()) {
            queue.erase(0, head);
            head = 0;
        }
    }
    out.resize(n);
    return out;
}

SelfDrivingAutomaton randomSda(int stateCount, int maxEmitLength, Rng& rng) {
    if (stateCount < 1 || maxEmitLength < 1) throw std::invalid_argument("bad SDA shape");
    SelfDrivingAutomaton sda;
    sda.states.resize(stateCount);
    sda.initialState = static_cast<int>(rng.below(stateCount));
    sda.bootstrapBit = static_cast<int>(rng.below(2));
    for (SdaState& s : sda.states) {
        for (int b = 0; b < 2; ++b) {
            s.on[b].next = static_cast<int>(rng.below(stateCount));
            const int len = 1 + static_cast<int>(rng.below(maxEmitLength));
            s.on[b].emit.clear();
            for (int i = 0; i < len; ++i)
                s.on[b].emit.push_back(static_cast<char>('0' + rng.below(2)));
        }
    }
    return sda;
}

SelfDrivingAutomaton parseSda(std::istream& in) {
    int stateCount;
    SelfDrivingAutomaton sda;
    if (!(in >> stateCount >> sda.initialState >> sda.bootstrapBit))
        throw std::runtime_error("bad SDA header");
    if (stateCount < 1) throw std::runtime_error("bad SDA state count");
    sda.states.resize(stateCount);
    for (SdaState& s : sda.states) {
        for (int b = 0; b < 2; ++b) {
            if (!(in >> s.on[b].next >> s.on[b].emit))
                throw std::runtime_error("truncated SDA transition list");
        }
    }
    sda.validate();
    return sda;
}

std::string formatSda(const SelfDrivingAutomaton& sda) {
    std::ostringstream out;
    out << sda.states.size() << '\n' << sda.initialState << '\n' << sda.bootstrapBit << '\n';
    for (const SdaState& s : sda.states)
        for (int b = 0; b < 2; ++b) out << s.on[b].next << ' ' << s.on[b].emit << '\n';
    return out.str();
}

namespace {

// Affine map of a k-bit value onto [lo, hi], rounding to nearest.
int mapAffine(std::uint32_t v, std::uint32_t maxV, int lo, int hi) {
    if (maxV == 0) return lo;
    return lo + static_cast<int>(std::llround(static_cast<double>(v) * (hi - lo) / maxV));
}

struct Candidate {
    Room room;
    Corridor corridor;
};

bool insideArena(const Room& r, int width, int height) {
    return r.x >= 0 && r.y >= 0 && r.x + r.w <= width && r.y + r.h <= height;
}

} // namespace

RoomLayout layoutRooms(const SelfDrivingAutomaton& sda, const PathNetwork& network, int budget,
                       const LayoutParams& params, std::vector<SelectionEvent>* trace) {
    sda.validate();
    if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
    if (params.minRoomW < 1 || params.minRoomW > params.maxRoomW || params.minRoomH < 1 ||
        params.minRoomH > params.maxRoomH)
        throw std::invalid_argument("bad room size bounds");

    RoomLayout layout;
    layout.width = network.width;
    layout.height = network.height;
    layout.network = network;

    // Seed anchor: passable cell nearest the arena center, first in row-major
    // scan order on ties.
    const double cxArena = network.width / 2.0;
    const double cyArena = network.height / 2.0;
    int anchorX = -1, anchorY = -1;
    double bestDist = 0.0;
    for (int y = 0; y < network.height; ++y) {
        for (int x = 0; x < network.width; ++x) {
            if (!network.at(x, y)) continue;
            const double dx = (x + 0.5) - cxArena;
            const double dy = (y + 0.5) - cyArena;
            const double d = dx * dx + dy * dy;
            if (anchorX < 0 || d < bestDist) {
                bestDist = d;
                anchorX = x;
                anchorY = y;
            }
        }
    }
    if (anchorX < 0) throw std::runtime_error("no substrate");

    BitStream bits(sda);

    // The seed room's dimensions come from the stream like any proposal's,
    // clamped to degenerate arenas.
    Room seed;
    seed.w = std::min(mapAffine(bits.nextInt(3), 7, params.minRoomW, params.maxRoomW), network.width);
    seed.h = std::min(mapAffine(bits.nextInt(3), 7, params.minRoomH, params.maxRoomH), network.height);
    seed.x = std::clamp(anchorX - seed.w / 2, 0, network.width - seed.w);
    seed.y = std::clamp(anchorY - seed.h / 2, 0, network.height - seed.h);
    layout.rooms.push_back(seed);

    auto collides = [&layout](const Room& r) {
        for (const Room& other : layout.rooms)
            if (r.overlaps(other)) return true;
        for (const Corridor& c : layout.corridors)
            if (r.contains(c.x, c.y)) return true;
        return false;
    };
    auto corridorBlocked = [&layout](const Corridor& c) {
        for (const Room& other : layout.rooms)
            if (other.contains(c.x, c.y)) return true;
        for (const Corridor& other : layout.corridors)
            if (other.x == c.x && other.y == c.y) return true;
        return false;
    };

    for (int proposal = 0; proposal < budget; ++proposal) {
        std::vector<int> eligible;
        for (std::size_t i = 0; i < layout.rooms.size(); ++i)
            if (layout.rooms[i].failures < params.failureLimit) eligible.push_back(static_cast<int>(i));
        if (eligible.empty()) break; // nothing can ever be placed again

        const int targetIdx = eligible[bits.nextInt(16) % eligible.size()];
        const Room target = layout.rooms[targetIdx]; // copy: rooms may reallocate on acceptance

        const std::uint32_t side = bits.nextInt(2); // 0=N 1=E 2=S 3=W
        const int w = mapAffine(bits.nextInt(3), 7, params.minRoomW, params.maxRoomW);
        const int h = mapAffine(bits.nextInt(3), 7, params.minRoomH, params.maxRoomH);
        const std::uint32_t rawOffset = bits.nextInt(4);

        Candidate cand;
        cand.room.w = w;
        cand.room.h = h;
        switch (side) {
            case 0: { // north of target
                const int offset = static_cast<int>(rawOffset % target.w);
                cand.corridor = {target.x + offset, target.y - 1};
                cand.room.x = cand.corridor.x - w / 2;
                cand.room.y = target.y - 1 - h;
                break;
            }
            case 1: { // east
                const int offset = static_cast<int>(rawOffset % target.h);
                cand.corridor = {target.x + target.w, target.y + offset};
                cand.room.x = target.x + target.w + 1;
                cand.room.y = cand.corridor.y - h / 2;
                break;
            }
            case 2: { // south
                const int offset = static_cast<int>(rawOffset % target.w);
                cand.corridor = {target.x + offset, target.y + target.h};
                cand.room.x = cand.corridor.x - w / 2;
                cand.room.y = target.y + target.h + 1;
                break;
            }
            default: { // west
                const int offset = static_cast<int>(rawOffset % target.h);
                cand.corridor = {target.x - 1, target.y + offset};
                cand.room.x = target.x - 1 - w;
                cand.room.y = cand.corridor.y - h / 2;
                break;
            }
        }

        const bool fits = insideArena(cand.room, layout.width, layout.height) &&
                          cand.corridor.x >= 0 && cand.corridor.x < layout.width &&
                          cand.corridor.y >= 0 && cand.corridor.y < layout.height &&
                          !collides(cand.room) && !corridorBlocked(cand.corridor);

        if (trace)
            trace->push_back(SelectionEvent{targetIdx, target.failures, fits});

        if (fits) {
            layout.rooms.push_back(cand.room);
            layout.corridors.push_back(cand.corridor);
        } else {
            ++layout.rooms[targetIdx].failures;
        }
    }
    return layout;
}

Image renderLayout(const RoomLayout& layout) {
    const Rgb white{255, 255, 255};
    const Rgb lightGrey{210, 210, 210};
    const Rgb grey{140, 140, 140};
    const Rgb blue{60, 90, 220};
    const Rgb red{220, 50, 50};

    Image img(layout.width, layout.height, white);
    for (int y = 0; y < layout.network.height; ++y)
        for (int x = 0; x < layout.network.width; ++x)
            if (layout.network.at(x, y)) img.at(x, y) = lightGrey;
    for (const Corridor& c : layout.corridors) img.fillRect(c.x, c.y, 1, 1, blue);
    for (std::size_t i = 1; i < layout.rooms.size(); ++i) {
        const Room& r = layout.rooms[i];
        img.fillRect(r.x, r.y, r.w, r.h, grey);
    }
    if (!layout.rooms.empty()) {
        const Room& r = layout.rooms.front();
        img.fillRect(r.x, r.y, r.w, r.h, red);
    }
    return img;
}

void writeLayoutFile(const RoomLayout& layout, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "richspaces-layout 1\n";
    out << "arena " << layout.width << ' ' << layout.height << '\n';
    out << "rooms " << layout.rooms.size() << '\n';
    for (std::size_t i = 0; i < layout.rooms.size(); ++i) {
        const Room& r = layout.rooms[i];
        out << r.x << ' ' << r.y << ' ' << r.w << ' ' << r.h << ' '
            << (i == 0 ? "seed" : "room") << '\n';
    }
    out << "corridors " << layout.corridors.size() << '\n';
    for (const Corridor& c : layout.corridors) out << c.x << ' ' << c.y << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

RoomLayout readLayoutFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string magic;
    int version;
    if (!(in >> magic >> version) || magic != "richspaces-layout" || version != 1)
        throw std::runtime_error("not a layout file: " + path);

    RoomLayout layout;
    std::string word;
    std::size_t n;
    if (!(in >> word >> layout.width >> layout.height) || word != "arena")
        throw std::runtime_error("bad layout arena line");
    if (!(in >> word >> n) || word != "rooms") throw std::runtime_error("bad layout rooms line");
    layout.rooms.resize(n);
    for (Room& r : layout.rooms) {
        std::string role;
        if (!(in >> r.x >> r.y >> r.w >> r.h >> role)) throw std::runtime_error("bad room record");
    }
    if (!(in >> word >> n) || word != "corridors")
        throw std::runtime_error("bad layout corridors line");
    layout.corridors.resize(n);
    for (Corridor& c : layout.corridors)
        if (!(in >> c.x >> c.y)) throw std::runtime_error("bad corridor record");
    // The path network is stored separately; leave it empty here.
    layout.network.width = layout.width;
    layout.network.height = layout.height;
    layout.network.passable.assign(static_cast<std::size_t>(layout.width) * layout.height, 0);
    return layout;
}

} // namespace richspaces
