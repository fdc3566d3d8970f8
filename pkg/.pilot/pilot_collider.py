import sys, time, json
import numpy as np
from causaldyn import nn, metrics
from causaldyn.data import collect_dataset
from causaldyn.dynamics import DynamicsTrainer, TrainerConfig, MaskedDynamicsModel, infer_graph
from causaldyn.envs import ChemicalConfig, ChemicalEnv
from causaldyn.explore import UniformPolicy

kind = sys.argv[1]; seed = int(sys.argv[2]); steps = int(sys.argv[3]); eps = float(sys.argv[4])
env = ChemicalEnv(ChemicalConfig(kind, n_objects=10, seed=seed))
t0 = time.time()
ds = collect_dataset(env, UniformPolicy(env), 100_000, nn.seeded_rng(seed), episode_len=100)
print(f"[{kind} s{seed}] collected 100K in {time.time()-t0:.0f}s", flush=True)
model = MaskedDynamicsModel(env.space, 64, [64, 32], nn.seeded_rng(seed))
tr = DynamicsTrainer(model, ds, TrainerConfig(epsilon=eps, seed=seed))
truth = env.ground_truth_graph()
t0 = time.time()
for k in range(steps):
    tr.training_step()
    if tr.step_counter % tr.config.cmi_every == 0:
        tr.cmi_update()
    if tr.step_counter % 2500 == 0:
        val = tr.validation_nll()
        if val < tr.best_val_nll:
            tr.best_val_nll = val
            tr.best_params = tr.model.copy_params()
        g = tr.current_graph()
        m = metrics.graph_metrics(g, truth)
        wrong = np.argwhere(g.adjacency != truth)
        print(f"[{kind} s{seed}] step {tr.step_counter} ({(time.time()-t0)/tr.step_counter*1000:.0f}ms/st) "
              f"val {val:.2f} acc {m['accuracy']:.4f} rec {m['recall']:.3f} prec {m['precision']:.3f} "
              f"wrong {len(wrong)}", flush=True)
g = tr.current_graph()
m = metrics.graph_metrics(g, truth)
print(f"[{kind} s{seed}] FINAL acc {m['accuracy']:.4f} f1 {m['f1']:.4f}")
wrong = np.argwhere(g.adjacency != truth)
print("wrong cells:", wrong.tolist()[:40])
np.save(f"/root/pkg/.pilot/cmi_{kind}_{seed}.npy", tr.cmi.values)
