// Captured payloads from the explorer API for the one-generic-class
// skeleton (class C<T> extends Object): levels 0 and 1, the three
// embedding reports of level 0 into level 1, and one subtype verdict.

import type { EmbeddingsPayload, GraphPayload, SubtypePayload } from "../src/apitypes.js";

const data = {
  "graph0": {
    "nodes": [
      {
        "id": "C<?>",
        "render_java": "C<?>",
        "render_short": "C<?>",
        "render_interval": "C<[Null-Object]>",
        "rank": 0,
        "expressible": true
      },
      {
        "id": "Null",
        "render_java": "Null",
        "render_short": "Null",
        "render_interval": "Null",
        "rank": 0,
        "expressible": false
      },
      {
        "id": "Object",
        "render_java": "Object",
        "render_short": "Object",
        "render_interval": "Object",
        "rank": 0,
        "expressible": true
      }
    ],
    "edges": [
      [
        "C<?>",
        "Null"
      ],
      [
        "Object",
        "C<?>"
      ]
    ],
    "level": 0,
    "mode": "intervals"
  },
  "graph1": {
    "nodes": [
      {
        "id": "C<? extends C<?>>",
        "render_java": "C<? extends C<?>>",
        "render_short": "C<?xC<?>>",
        "render_interval": "C<[Null-C<[Null-Object]>]>",
        "rank": 1,
        "expressible": true
      },
      {
        "id": "C<? super C<?>>",
        "render_java": "C<? super C<?>>",
        "render_short": "C<?sC<?>>",
        "render_interval": "C<[C<[Null-Object]>-Object]>",
        "rank": 1,
        "expressible": true
      },
      {
        "id": "C<?>",
        "render_java": "C<?>",
        "render_short": "C<?>",
        "render_interval": "C<[Null-Object]>",
        "rank": 0,
        "expressible": true
      },
      {
        "id": "C<C<?>>",
        "render_java": "C<C<?>>",
        "render_short": "C<C<?>>",
        "render_interval": "C<[C<[Null-Object]>-C<[Null-Object]>]>",
        "rank": 1,
        "expressible": true
      },
      {
        "id": "C<Null>",
        "render_java": "C<Null>",
        "render_short": "C<Null>",
        "render_interval": "C<[Null-Null]>",
        "rank": 1,
        "expressible": false
      },
      {
        "id": "C<Object>",
        "render_java": "C<Object>",
        "render_short": "C<Object>",
        "render_interval": "C<[Object-Object]>",
        "rank": 1,
        "expressible": true
      },
      {
        "id": "Null",
        "render_java": "Null",
        "render_short": "Null",
        "render_interval": "Null",
        "rank": 0,
        "expressible": false
      },
      {
        "id": "Object",
        "render_java": "Object",
        "render_short": "Object",
        "render_interval": "Object",
        "rank": 0,
        "expressible": true
      }
    ],
    "edges": [
      [
        "C<? extends C<?>>",
        "C<C<?>>"
      ],
      [
        "C<? extends C<?>>",
        "C<Null>"
      ],
      [
        "C<? super C<?>>",
        "C<C<?>>"
      ],
      [
        "C<? super C<?>>",
        "C<Object>"
      ],
      [
        "C<?>",
        "C<? extends C<?>>"
      ],
      [
        "C<?>",
        "C<? super C<?>>"
      ],
      [
        "C<C<?>>",
        "Null"
      ],
      [
        "C<Null>",
        "Null"
      ],
      [
        "C<Object>",
        "Null"
      ],
      [
        "Object",
        "C<?>"
      ]
    ],
    "level": 1,
    "mode": "intervals"
  },
  "copy": {
    "class": "C",
    "hole": 0,
    "kind": "copy",
    "level": 0,
    "verified": true,
    "mapping": [
      [
        "C<?>",
        "C<? extends C<?>>"
      ],
      [
        "Null",
        "C<Null>"
      ],
      [
        "Object",
        "C<?>"
      ]
    ],
    "pruned": []
  },
  "flip": {
    "class": "C",
    "hole": 0,
    "kind": "flip",
    "level": 0,
    "verified": true,
    "mapping": [
      [
        "C<?>",
        "C<? super C<?>>"
      ],
      [
        "Null",
        "C<?>"
      ],
      [
        "Object",
        "C<Object>"
      ]
    ],
    "pruned": []
  },
  "flatten": {
    "class": "C",
    "hole": 0,
    "kind": "flatten",
    "level": 0,
    "verified": true,
    "mapping": [
      [
        "C<?>",
        "C<C<?>>"
      ],
      [
        "Null",
        "C<Null>"
      ],
      [
        "Object",
        "C<Object>"
      ]
    ],
    "pruned": []
  },
  "subtype": {
    "result": true,
    "lhs": {
      "java": "C<Object>",
      "short": "C<Object>",
      "interval": "C<[Object-Object]>"
    },
    "rhs": {
      "java": "C<Object>",
      "short": "C<Object>",
      "interval": "C<[Object-Object]>"
    }
  }
} as const;

export const graph0 = data.graph0 as unknown as GraphPayload;
export const graph1 = data.graph1 as unknown as GraphPayload;
export const copyEmbedding = data.copy as unknown as EmbeddingsPayload;
export const flipEmbedding = data.flip as unknown as EmbeddingsPayload;
export const flattenEmbedding = data.flatten as unknown as EmbeddingsPayload;
export const subtypeVerdict = data.subtype as unknown as SubtypePayload;
