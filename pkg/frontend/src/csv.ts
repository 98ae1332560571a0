/** Strict CSV reading for the numeric artifact files. */

export interface CsvTable {
  header: string[];
  rows: number[][];
}

/**
 * Parse a CSV artifact and check its header verbatim.
 * Every body cell must be a finite number; the error names the offending
 * column and line so schema mismatches are diagnosable from the exit
 * message alone.
 */
export function parseCsv(text: string, expectedHeader: string): CsvTable {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error('csv: file is empty');
  }
  if (lines[0] !== expectedHeader) {
    throw new Error(
      `csv: header mismatch: expected "${expectedHeader}", got "${lines[0]}"`,
    );
  }
  const header = lines[0].split(',');
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(',');
    if (cells.length !== header.length) {
      throw new Error(`csv: line ${i + 1} has ${cells.length} cells, ` +
        `expected ${header.length}`);
    }
    const row = cells.map((cell, j) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new Error(
          `csv: field "${header[j]}" on line ${i + 1} is not a number: ` +
          `"${cell}"`,
        );
      }
      return value;
    });
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new Error('csv: no data rows');
  }
  return { header, rows };
}

export function column(table: CsvTable, name: string): number[] {
  const j = table.header.indexOf(name);
  if (j < 0) {
    throw new Error(`csv: missing column "${name}"`);
  }
  return table.rows.map((row) => row[j]);
}
