from ccnvkit.data.scene import Scene, load_scene, scene_files
