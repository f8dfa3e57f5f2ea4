#pragma once

#include "dnacode/base.hpp"
#include "dnacode/bit_matrix.hpp"
#include "dnacode/block_code.hpp"
#include "dnacode/channel.hpp"
#include "dnacode/code_spec.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/syndrome_decoder.hpp"
#include "dnacode/text_codec.hpp"
#include "dnacode/word.hpp"
