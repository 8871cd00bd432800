#pragma once

#include "settune/consonance.hpp"
#include "settune/dissonance.hpp"
#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/io/csv.hpp"
#include "settune/io/document.hpp"
#include "settune/io/figures.hpp"
#include "settune/io/format.hpp"
#include "settune/io/scala.hpp"
#include "settune/io/set_expression.hpp"
#include "settune/note.hpp"
#include "settune/ratio.hpp"
#include "settune/tuning.hpp"
#include "settune/version.hpp"
