/** Render a wave CSV artifact as a one-period snapshot figure. */

import { runKind } from './render.js';

process.exit(runKind('wave', process.argv.slice(2)));
