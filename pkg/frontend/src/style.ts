// Display conventions shared by both figures.

// Short labels for the three measurement backends: SV reads the exact
// statevector, Q estimates from shot sampling, QN adds gate/readout
// noise on top of the sampling.
export const NOISE_LABELS: Record<string, string> = {
  exact: "SV",
  shots: "Q",
  device: "QN",
};

export const NOISE_ORDER = ["exact", "shots", "device"];

export const NOISE_COLORS: Record<string, string> = {
  exact: "#4c72b0",
  shots: "#dd8452",
  device: "#55a868",
};

export const NOISE_DASH: Record<string, string> = {
  exact: "",
  shots: "6 3",
  device: "2 3",
};

// one color per optimizer, assigned by first appearance in the file
export const SERIES_COLORS = [
  "#4c72b0",
  "#dd8452",
  "#55a868",
  "#c44e52",
  "#8172b3",
  "#937860",
  "#da8bc3",
  "#8c8c8c",
];

export function noiseLabel(noise: string): string {
  return NOISE_LABELS[noise] ?? noise;
}

export function orderNoises(present: Iterable<string>): string[] {
  const seen = [...new Set(present)];
  const known = NOISE_ORDER.filter((n) => seen.includes(n));
  const unknown = seen.filter((n) => !NOISE_ORDER.includes(n));
  return [...known, ...unknown];
}
