/** Render a profile JSON artifact as an SVG staircase figure. */

import { runKind } from './render.js';

process.exit(runKind('profile', process.argv.slice(2)));
