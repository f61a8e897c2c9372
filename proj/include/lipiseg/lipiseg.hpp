#pragma once

// Umbrella header for the whole library.

#include "lipiseg/annotation.hpp"
#include "lipiseg/components.hpp"
#include "lipiseg/eval.hpp"
#include "lipiseg/features.hpp"
#include "lipiseg/geometry.hpp"
#include "lipiseg/image.hpp"
#include "lipiseg/io.hpp"
#include "lipiseg/overlay.hpp"
#include "lipiseg/page.hpp"
#include "lipiseg/pipeline.hpp"
#include "lipiseg/pnm.hpp"
#include "lipiseg/profile.hpp"
#include "lipiseg/segments.hpp"
#include "lipiseg/synth.hpp"
#include "lipiseg/word.hpp"
