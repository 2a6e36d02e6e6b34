#pragma once

#include "affembed/append.hpp"
#include "affembed/embedding_io.hpp"
#include "affembed/embedding_set.hpp"
#include "affembed/errors.hpp"
#include "affembed/eval.hpp"
#include "affembed/lexicon.hpp"
#include "affembed/report.hpp"
#include "affembed/retrofit.hpp"
#include "affembed/version.hpp"
