import sys, time
import numpy as np
from causaldyn import nn, metrics
from causaldyn.data import collect_dataset
from causaldyn.dynamics import DynamicsTrainer, TrainerConfig, MaskedDynamicsModel
from causaldyn.envs import PhysicalConfig, PhysicalEnv, ScriptedCollector

seed = int(sys.argv[1]); steps = int(sys.argv[2])
env = PhysicalEnv(PhysicalConfig(n_objects=3, grid_size=5, seed=seed))
t0 = time.time()
ds = collect_dataset(env, ScriptedCollector(env), 200_000, nn.seeded_rng(seed), episode_len=200)
print(f"[phys s{seed}] collected 200K in {time.time()-t0:.0f}s", flush=True)
model = MaskedDynamicsModel(env.space, 128, [128, 128], nn.seeded_rng(seed))
tr = DynamicsTrainer(model, ds, TrainerConfig(epsilon=0.01, seed=seed))
truth = env.ground_truth_graph()
t0 = time.time()
for k in range(steps):
    tr.training_step()
    if tr.step_counter % tr.config.cmi_every == 0:
        tr.cmi_update()
    if tr.step_counter % 2500 == 0:
        val = tr.validation_nll()
        g = tr.current_graph()
        m = metrics.graph_metrics(g, truth)
        print(f"[phys s{seed}] step {tr.step_counter} ({(time.time()-t0)/tr.step_counter*1000:.0f}ms/st) "
              f"val {val:.3f} acc {m['accuracy']:.4f} min-cmi-true {tr.cmi.values[truth].min():.4f}", flush=True)
g = tr.current_graph()
m = metrics.graph_metrics(g, truth)
print(f"[phys s{seed}] FINAL acc {m['accuracy']:.4f}")
print("cmi row mins:", np.round(tr.cmi.values.min(axis=1), 4).tolist())
np.save(f"/root/pkg/.pilot/cmi_phys_{seed}.npy", tr.cmi.values)
