// Copyright 2026 The oadeval Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OAD_SCORES_HPP_
#define OAD_SCORES_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace oad {

// Dense per-frame, per-class detector confidences for one video. Scores are
// raw reals: the protocol only uses their ordering, so no normalization or
// calibration of magnitudes is required. Every value must be finite.
struct ScoreTrack {
  std::string video_id;
  std::int64_t num_frames = 0;
  int num_classes = 0;
  // Set when the track came from a version-2 window-score file.
  std::optional<int> window_length;
  std::vector<float> values;  // row-major, frame-major: values[t*C + c]

  float at(std::int64_t t, int c) const {
    return values[static_cast<std::size_t>(t) * num_classes + c];
  }
  std::span<const float> row(std::int64_t t) const {
    return {values.data() + static_cast<std::size_t>(t) * num_classes,
            static_cast<std::size_t>(num_classes)};
  }
};

struct ScoreSet {
  std::map<std::string, ScoreTrack> tracks;  // keyed by video_id
  int num_classes = 0;

  // Throws kConsistency if the track's class count disagrees with the set's.
  void insert(ScoreTrack track);
  const ScoreTrack* find(std::string_view video_id) const;
};

enum class ScoreFormat { kBinary, kCsv };

// Binary score layout, little-endian throughout:
//   magic "OADS" | u16 version | u16 reserved(0) | u32 num_frames |
//   u16 num_classes | [version 2 only: u16 window_length] |
//   num_frames*num_classes IEEE-754 binary32, row-major (frame-major).
// Version 1 is the plain track format; version 2 adds the window_length
// header field used for fixed-length window scores. The reader accepts both.
//
// CSV alternative: header "frame,<class0>,<class1>,...", then one row per
// frame with the frame index followed by that frame's scores.
//
// Reading checks the declared dimensions against the payload and rejects
// non-finite values, naming the (frame, class) coordinates.
ScoreTrack read_scores(std::istream& in, ScoreFormat format,
                       std::string video_id = {});

// Byte-deterministic writer; the binary form round-trips bit-exactly and the
// CSV form prints shortest round-trip decimals. class_names, when given,
// supply the CSV header (defaults to class0..classN-1).
void write_scores(const ScoreTrack& track, std::ostream& out,
                  ScoreFormat format,
                  std::span<const std::string> class_names = {});

// Directory convention: one binary score file per video, named
// "<video_id>.oads". Throws kIo when the directory cannot be read.
ScoreSet read_score_dir(const std::string& dir);
void write_score_dir(const ScoreSet& scores, const std::string& dir);

// Forward-only view over a track. Consumers receive rows strictly in t order
// and hold no access path to rows beyond the one handed out, mirroring a live
// stream where the future is not available yet.
class FrameStream {
 public:
  explicit FrameStream(const ScoreTrack& track) : track_(&track) {}

  struct Frame {
    std::int64_t t = 0;
    std::span<const float> scores;
  };

  // Frames t = 0..T-1 in order, then std::nullopt.
  std::optional<Frame> next();

 private:
  const ScoreTrack* track_;
  std::int64_t next_t_ = 0;
};

}  // namespace oad

#endif  // OAD_SCORES_HPP_
